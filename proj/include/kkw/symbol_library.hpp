/** Built-in boundary-normalized symbol components for the operators the
 * boundary pipeline consumes, plus the Dirac cube used by the composition
 * identity check. Components are transcriptions of the reference
 * computation's stated symbols, not derivations from connection
 * coefficients; the inverse-symbol recursion is validated against them.
 */
#pragma once

#include <stdexcept>

#include "kkw/symbol_expr.hpp"

namespace kkw {

enum class OperatorId { DINV1, DINV3, NABLA2, NABLA2_DINV1, NABLA2_DINV3 };

inline const char* operator_name(OperatorId op) {
    switch (op) {
        case OperatorId::DINV1: return "Dinv1";
        case OperatorId::DINV3: return "Dinv3";
        case OperatorId::NABLA2: return "nabla2";
        case OperatorId::NABLA2_DINV1: return "nabla2_Dinv1";
        case OperatorId::NABLA2_DINV3: return "nabla2_Dinv3";
    }
    return "?";
}

struct UnknownSymbol : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace symbols_detail {

inline GaussianRational gr(long long n, long long d = 1) {
    return GaussianRational(Rational(n, d));
}
inline GaussianRational gi(long long n, long long d = 1) {
    return GaussianRational(Rational(0), Rational(n, d));
}

inline CliffordExpr cx() { return CliffordExpr::vector(VectorSymbol::xip()); }
inline CliffordExpr cd() { return CliffordExpr::vector(VectorSymbol::dxn()); }
inline CliffordExpr cp() { return CliffordExpr::vector(VectorSymbol::dxip()); }

/// c(xi) = c(xi') + xi_n c(dx_n) as a numerator polynomial.
inline XiPoly cxi_poly() {
    return XiPoly::monomial(0, cx()) + XiPoly::monomial(1, cd());
}

inline XiPoly xi_power(int k) { return XiPoly::monomial(k, CliffordExpr::identity()); }

/// sigma_{-2}(D^{-1}) at x0: c(xi) p0 c(xi)/|xi|^4 + c(xi)c(dx_n)d_xn c(xi')/|xi|^4
///                           - h'(0) c(xi)c(dx_n)c(xi)/|xi|^6.
inline XiRational dinv1_sigma_m2_radial() {
    XiPoly p0 = XiPoly(CliffordExpr::opaque("p0"));
    XiRational r = XiRational::term(cxi_poly() * p0 * cxi_poly(), 2, 2);
    r += XiRational::term(cxi_poly() * XiPoly(CliffordExpr::word({Factor::vector(VectorSymbol::dxn()),
                                                                  Factor::vector(VectorSymbol::dxip())})),
                          2, 2);
    XiPoly sandwich = cxi_poly() * XiPoly(cd()) * cxi_poly();
    r += XiRational::term(sandwich.scaled(-CoeffPoly::hp()), 3, 3);
    return r;
}

/// sigma_{-4}(D^{-3}) radial at x0 (pole orders 4,4).
inline XiRational dinv3_sigma_m4_radial() {
    // (11/2 xi (1+xi^2) + 8 i xi) h'(0) c(xi')
    XiPoly s1 = XiPoly::from_scalars({gr(0), gr(11, 2) + gi(8), gr(0), gr(11, 2)});
    // (-2i + 6i xi^2 - 7/4 (1+xi^2) + 15/4 xi^2 (1+xi^2)) h'(0) c(dx_n)
    XiPoly s2 = XiPoly::from_scalars({gr(-7, 4) + gi(-2), gr(0), gr(2) + gi(6), gr(0), gr(15, 4)});
    // -3 i xi (1+xi^2) d_xn c(xi')
    XiPoly s3 = XiPoly::from_scalars({gr(0), gi(-3), gr(0), gi(-3)});
    // i (1+xi^2) c(xi') c(dx_n) d_xn c(xi')
    XiPoly s4 = XiPoly::from_scalars({gi(1), gr(0), gi(1)});
    XiPoly num = s1.scaled(CoeffPoly::hp()) * XiPoly(cx()) +
                 s2.scaled(CoeffPoly::hp()) * XiPoly(cd()) + s3 * XiPoly(cp()) +
                 s4 * XiPoly(CliffordExpr::word({Factor::vector(VectorSymbol::xip()),
                                                 Factor::vector(VectorSymbol::dxn()),
                                                 Factor::vector(VectorSymbol::dxip())}));
    return XiRational::term(num, 4, 4);
}

/// Attach the four XY patterns of sum_{j,l<=n} X_j Y_l xi_j xi_l to a radial.
inline SymbolExpr xy_family(int degree, const XiRational& radial, GaussianRational scale) {
    SymbolExpr e;
    XiRational base = radial.scaled(scale);
    e.add_component(degree, TangentialPattern::xy(), base);
    XiRational shifted = XiRational::term(xi_power(1), 0, 0) * base;
    e.add_component(degree, TangentialPattern::xn(), shifted);
    e.add_component(degree, TangentialPattern::nx(), shifted);
    e.add_component(degree, TangentialPattern::nn(),
                    XiRational::term(xi_power(2), 0, 0) * base);
    return e;
}

}  // namespace symbols_detail

inline SymbolExpr get_symbol(OperatorId op, int degree) {
    using namespace symbols_detail;
    switch (op) {
        case OperatorId::DINV1:
            if (degree == -1)
                return SymbolExpr::component(-1, TangentialPattern::one(),
                                             XiRational::term(cxi_poly().scaled(gi(1)), 1, 1));
            if (degree == -2)
                return SymbolExpr::component(-2, TangentialPattern::one(), dinv1_sigma_m2_radial());
            break;

        case OperatorId::DINV3:
            if (degree == -3)
                return SymbolExpr::component(-3, TangentialPattern::one(),
                                             XiRational::term(cxi_poly().scaled(gi(-1)), 2, 2));
            if (degree == -4)
                return SymbolExpr::component(-4, TangentialPattern::one(), dinv3_sigma_m4_radial());
            break;

        case OperatorId::NABLA2:
            if (degree == 2) {
                SymbolExpr e;
                e.add_component(2, TangentialPattern::xy(),
                                XiRational::constant(CliffordExpr::identity(CoeffPoly(-1))));
                e.add_component(2, TangentialPattern::xn(),
                                XiRational::term(xi_power(1).scaled(CoeffPoly(-1)), 0, 0));
                e.add_component(2, TangentialPattern::nx(),
                                XiRational::term(xi_power(1).scaled(CoeffPoly(-1)), 0, 0));
                e.add_component(2, TangentialPattern::nn(),
                                XiRational::term(xi_power(2).scaled(CoeffPoly(-1)), 0, 0));
                return e;
            }
            if (degree == 1) {
                SymbolExpr e;
                e.add_component(1, TangentialPattern::odd_opaque("X_j dY_l xi_l"),
                                XiRational::constant(CliffordExpr::opaque("dY", CoeffPoly(gi(1)))));
                e.add_component(1, TangentialPattern::odd_opaque("A(Y) X_j xi_j"),
                                XiRational::constant(CliffordExpr::opaque("A(Y)", CoeffPoly(gi(1)))));
                // transcribed as printed: the second connection sum repeats Y
                e.add_component(1, TangentialPattern::odd_opaque("A(Y) Y_l xi_l"),
                                XiRational::constant(CliffordExpr::opaque("A(Y)", CoeffPoly(gi(1)))));
                return e;
            }
            if (degree == 0) {
                SymbolExpr e;
                e.add_component(0, TangentialPattern::one(),
                                XiRational::constant(CliffordExpr::opaque("X[A(Y)]")));
                e.add_component(0, TangentialPattern::one(),
                                XiRational::constant(CliffordExpr::word(
                                    {Factor::make_opaque("A(X)"), Factor::make_opaque("A(Y)")})));
                return e;
            }
            break;

        case OperatorId::NABLA2_DINV1:
            if (degree == 1)
                return xy_family(1, XiRational::term(cxi_poly(), 1, 1), gi(-1));
            if (degree == 0) {
                SymbolExpr e = xy_family(0, dinv1_sigma_m2_radial(), gr(-1));
                XiRational codd = XiRational::term(cxi_poly(), 1, 1);
                e.add_component(0, TangentialPattern::odd_opaque("X_j dY_l xi_j"),
                                (XiRational::constant(CliffordExpr::opaque("dY")) * codd)
                                    .scaled(gi(-1)));
                e.add_component(0, TangentialPattern::odd_opaque("A(Y) X_j xi_j"),
                                (XiRational::constant(CliffordExpr::opaque("A(Y)")) * codd)
                                    .scaled(gr(-1)));
                e.add_component(0, TangentialPattern::odd_opaque("A(Y) Y_l xi_l"),
                                (XiRational::constant(CliffordExpr::opaque("A(Y)")) * codd)
                                    .scaled(gr(-1)));
                return e;
            }
            break;

        case OperatorId::NABLA2_DINV3:
            if (degree == -1)
                return xy_family(-1, XiRational::term(cxi_poly(), 2, 2), gi(1));
            if (degree == -2) {
                SymbolExpr e = xy_family(-2, dinv3_sigma_m4_radial(), gr(1));
                XiRational codd = XiRational::term(cxi_poly(), 2, 2);
                e.add_component(-2, TangentialPattern::odd_opaque("A(Y) X_j xi_j"),
                                (XiRational::constant(CliffordExpr::opaque("A(Y)")) * codd)
                                    .scaled(gr(-1)));
                e.add_component(-2, TangentialPattern::odd_opaque("A(X) Y_l xi_l"),
                                (XiRational::constant(CliffordExpr::opaque("A(X)")) * codd)
                                    .scaled(gr(-1)));
                // index-inconsistent derivative sum, transcribed as written
                e.add_component(-2, TangentialPattern::odd_opaque("X_j dY_l/dX_j xi_l"),
                                (XiRational::constant(CliffordExpr::opaque("dY/dX")) * codd)
                                    .scaled(gr(-1)));
                return e;
            }
            break;
    }
    throw UnknownSymbol(std::string("get_symbol: no transcription for ") + operator_name(op) +
                        " at degree " + std::to_string(degree));
}

/// First-order Dirac symbol {sigma_1 = -i c(xi), sigma_0 = p0 (opaque)}.
inline SymbolExpr dirac_symbol() {
    using namespace symbols_detail;
    SymbolExpr d;
    d.add_component(1, TangentialPattern::one(),
                    XiRational::term(cxi_poly().scaled(gi(-1)), 0, 0));
    d.add_component(0, TangentialPattern::one(),
                    XiRational::constant(CliffordExpr::opaque("p0")));
    return d;
}

/// Top two components of sigma(D^3), built by composing the Dirac symbol
/// with itself; the leading part is -i |xi|^2 c(xi).
inline SymbolExpr dcube_symbol() {
    SymbolExpr d = dirac_symbol();
    SymbolExpr d2;
    d2 += compose_symbols(d, d, 2);
    d2 += compose_symbols(d, d, 1);
    SymbolExpr d3;
    d3 += compose_symbols(d2, d, 3);
    d3 += compose_symbols(d2, d, 2);
    return d3;
}

}  // namespace kkw
