#include "doctest.h"

#include <chrono>
#include <complex>

#include "kkw/oracle.hpp"
#include "kkw/pipeline.hpp"

using namespace kkw;

namespace {

GaussianRational gr(long long n, long long d = 1) { return GaussianRational(Rational(n, d)); }
GaussianRational gi(long long n, long long d = 1) {
    return GaussianRational(Rational(0), Rational(n, d));
}

const std::map<std::string, std::complex<double>> kNumericValuation = {
    {"PI", {M_PI, 0.0}},
    {"HP", {0.37, 0.0}},
    {"C0", {0.41, -0.23}},
    {"OMEGA1", {2.0 * M_PI, 0.0}},
    {"OMEGA2", {4.0 * M_PI, 0.0}},
    {"OMEGA3", {2.0 * M_PI * M_PI, 0.0}},
    {"OMEGA4", {8.0 * M_PI * M_PI / 3.0, 0.0}},
    {"T", {1.0, 0.0}},
    {"N", {1.0, 0.0}},
};

}  // namespace

TEST_CASE("case enumeration") {
    CHECK_THROWS_AS(enumerate_cases(5), UnsupportedDimension);

    auto n3 = enumerate_cases(3);
    REQUIRE(n3.size() == 1);
    CHECK(n3[0].r == 1);
    CHECK(n3[0].l == -3);
    CHECK(n3[0].prefactor == gi(-1));

    auto n4 = enumerate_cases(4);
    REQUIRE(n4.size() == 5);
    CHECK(n4[0].label == "aI");
    CHECK(n4[0].alpha_norm == 1);
    CHECK(n4[0].prefactor == gr(-1));
    CHECK(n4[1].label == "aII");
    CHECK(n4[1].j == 1);
    CHECK(n4[1].prefactor == gr(-1, 2));
    CHECK(n4[2].label == "aIII");
    CHECK(n4[2].k == 1);
    CHECK(n4[2].prefactor == gr(-1, 2));
    CHECK(n4[3].label == "b");
    CHECK(n4[3].r == 0);
    CHECK(n4[3].prefactor == gi(-1));
    CHECK(n4[4].label == "c");
    CHECK(n4[4].l == -4);
    CHECK(n4[4].prefactor == gi(-1));

    auto n6 = enumerate_cases(6);
    REQUIRE(n6.size() == 5);
    for (auto& c : n6) CHECK(c.r <= -1);
    for (auto& c : n6) CHECK(c.l <= -3);

    // degree bookkeeping: r + l - k - j - |alpha| = 1 - n throughout
    for (int n : {3, 4, 6})
        for (auto& c : enumerate_cases(n)) CHECK(c.degree_sum() == 1 - n);
}

TEST_CASE("case aI vanishes on the full-symbolic path") {
    PairingTable t = boundary_pairing_table();
    OpaqueTraceRegistry reg = default_opaque_registry();
    for (int n : {4, 6}) {
        auto cases = enumerate_cases(n);
        CaseResult r = compute_case(cases[0], n, CasePath::FULL_SYMBOLIC, t, reg);
        CHECK(r.phi.is_zero());
        CHECK(!r.flags.empty());
    }
}

TEST_CASE("mixed tangential patterns never contribute") {
    PairingTable t = boundary_pairing_table();
    OpaqueTraceRegistry reg = default_opaque_registry();
    for (int n : {3, 4, 6}) {
        for (CasePath path : {CasePath::FULL_SYMBOLIC, CasePath::TRANSCRIBED_INTEGRAND}) {
            for (auto& bc : enumerate_cases(n)) {
                CaseResult r = compute_case(bc, n, path, t, reg);
                for (auto& tb : r.breakdown) {
                    if (tb.pattern.kind == TangentialPattern::Kind::SUM_XJ_YN ||
                        tb.pattern.kind == TangentialPattern::Kind::SUM_XN_YL ||
                        tb.pattern.kind == TangentialPattern::Kind::ODD_OPAQUE) {
                        CHECK(tb.contribution.is_zero());
                    }
                }
            }
        }
    }
}

TEST_CASE("phi lives in the coefficient ring without xi or opaque leftovers") {
    PairingTable t = boundary_pairing_table();
    OpaqueTraceRegistry reg = default_opaque_registry();
    for (int n : {3, 4, 6}) {
        for (CasePath path : {CasePath::FULL_SYMBOLIC, CasePath::TRANSCRIBED_INTEGRAND}) {
            PhiResult pr = compute_phi(n, path, t, reg);
            REQUIRE(pr.cases.size() == enumerate_cases(n).size());
            CHECK(!pr.total.contains_opaque("dd"));
            for (auto& [mono, c] : pr.total.terms())
                for (auto& [s, e] : mono.factors)
                    CHECK(s.kind != ScalarSymbol::Kind::OPAQUE);
        }
    }
}

TEST_CASE("full-path bilinearity in the vector fields") {
    PairingTable t = boundary_pairing_table();
    OpaqueTraceRegistry reg = default_opaque_registry();
    BoundaryCase bc = enumerate_cases(4)[2];  // aIII: j = 0, k = 1
    CaseResult base = compute_case(bc, 4, CasePath::FULL_SYMBOLIC, t, reg);

    // replicate the pipeline with scaled vector fields
    std::vector<std::string> flags;
    SymbolExpr f1 = get_symbol(OperatorId::NABLA2_DINV1, bc.r).scaled_xy(gr(3), gr(-5, 2));
    f1 = f1.d_xin().pi_plus(&flags);
    SymbolExpr f2 = get_symbol(OperatorId::DINV3, bc.l).d_xn().d_xin();
    TraceIntegrand integrand = trace_symbol(f1 * f2, 4, t, reg, &flags);
    CaseResult scaled = integrate_case(bc, 4, integrand, CasePath::FULL_SYMBOLIC, flags);

    CHECK(scaled.phi == base.phi.scaled(gr(3) * gr(-5, 2)));
}

TEST_CASE("integration by parts equivalence on the radial integral") {
    // For the j = k = 0 cases, integrating tr[pi+ s_r x d_xi s_l] over
    // Gamma+ equals minus the integral of tr[d_xi pi+ s_r x s_l].
    PairingTable t = boundary_pairing_table();
    OpaqueTraceRegistry reg = default_opaque_registry();
    struct Probe {
        int n;
        OperatorId op;
        int r, l;
    };
    for (auto [n, op, r, l] : {Probe{3, OperatorId::NABLA2_DINV1, 1, -3},
                               Probe{4, OperatorId::NABLA2_DINV1, 0, -3},
                               Probe{4, OperatorId::NABLA2_DINV1, 1, -4},
                               Probe{6, OperatorId::NABLA2_DINV3, -1, -4},
                               Probe{6, OperatorId::NABLA2_DINV3, -2, -3}}) {
        std::vector<std::string> flags;
        SymbolExpr proj = get_symbol(op, r).pi_plus(&flags);
        SymbolExpr sl = get_symbol(OperatorId::DINV3, l);
        TraceIntegrand direct = trace_symbol(proj * sl.d_xin(), n, t, reg, &flags);
        TraceIntegrand parts = trace_symbol(proj.d_xin() * sl, n, t, reg, &flags);
        std::map<TangentialPattern, CoeffPoly> direct_contours, parts_contours;
        for (auto& [p, rad] : direct)
            direct_contours[p] = pipeline_detail::scalar_of(rad.contour_gamma_plus());
        for (auto& [p, rad] : parts)
            parts_contours[p] = pipeline_detail::scalar_of(rad.contour_gamma_plus());
        for (auto& [p, c] : direct_contours) {
            auto it = parts_contours.find(p);
            CoeffPoly other = it == parts_contours.end() ? CoeffPoly() : it->second;
            CHECK(c == -other);
        }
    }
}

TEST_CASE("repeated parts integration on the derivative cases") {
    // aII-shaped integrals: tr[pi+ d_xn s_r x d^2_xi s_l] integrates like
    // +tr[d^2_xi pi+ d_xn s_r x s_l]; aIII-shaped ones flip one sign.
    PairingTable t = boundary_pairing_table();
    OpaqueTraceRegistry reg = default_opaque_registry();
    for (int n : {4, 6}) {
        OperatorId op = n == 6 ? OperatorId::NABLA2_DINV3 : OperatorId::NABLA2_DINV1;
        int r = n == 6 ? -1 : 1;
        std::vector<std::string> flags;
        SymbolExpr sl = get_symbol(OperatorId::DINV3, -3);

        SymbolExpr f1_aII = get_symbol(op, r).d_xn().pi_plus(&flags);
        TraceIntegrand direct = trace_symbol(f1_aII * sl.d_xin().d_xin(), n, t, reg, &flags);
        TraceIntegrand twice = trace_symbol(f1_aII.d_xin().d_xin() * sl, n, t, reg, &flags);
        for (auto& [p, rad] : direct) {
            CoeffPoly lhs = pipeline_detail::scalar_of(rad.contour_gamma_plus());
            auto it = twice.find(p);
            CoeffPoly rhs = it == twice.end()
                                ? CoeffPoly()
                                : pipeline_detail::scalar_of(it->second.contour_gamma_plus());
            CHECK(lhs == rhs);
        }

        SymbolExpr f1_aIII = get_symbol(op, r).d_xin().pi_plus(&flags);
        SymbolExpr sl_xn = sl.d_xn();
        TraceIntegrand d3 = trace_symbol(f1_aIII * sl_xn.d_xin(), n, t, reg, &flags);
        TraceIntegrand p3 = trace_symbol(f1_aIII.d_xin() * sl_xn, n, t, reg, &flags);
        for (auto& [p, rad] : d3) {
            CoeffPoly lhs = pipeline_detail::scalar_of(rad.contour_gamma_plus());
            auto it = p3.find(p);
            CoeffPoly rhs = it == p3.end()
                                ? CoeffPoly()
                                : pipeline_detail::scalar_of(it->second.contour_gamma_plus());
            CHECK(lhs == -rhs);
        }
    }
}

TEST_CASE("every case integrand passes the contour quadrature oracle") {
    PairingTable t = boundary_pairing_table();
    OpaqueTraceRegistry reg = default_opaque_registry();
    auto t0 = std::chrono::steady_clock::now();
    for (int n : {3, 4, 6}) {
        for (CasePath path : {CasePath::FULL_SYMBOLIC, CasePath::TRANSCRIBED_INTEGRAND}) {
            for (auto& bc : enumerate_cases(n)) {
                CaseResult r = compute_case(bc, n, path, t, reg);
                for (auto& tb : r.breakdown) {
                    // opaque-weighted odd patterns have no numeric valuation;
                    // the parity test pins their contribution to zero
                    if (tb.contour.contains(ScalarSymbol::Kind::OPAQUE)) continue;
                    auto rad = r.integrand.find(tb.pattern);
                    REQUIRE(rad != r.integrand.end());
                    auto numeric = numeric_contour([&](std::complex<double> z) {
                        return rad->second.eval_scalar(z, kNumericValuation);
                    });
                    auto exact = tb.contour.eval(kNumericValuation);
                    CHECK(std::abs(numeric - exact) <= 1e-9 * (1.0 + std::abs(exact)));
                }
            }
        }
    }
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(dt < 30.0);
}

TEST_CASE("the three-dimensional boundary term, both paths") {
    PairingTable t = boundary_pairing_table();
    OpaqueTraceRegistry reg = default_opaque_registry();

    PhiResult full = compute_phi(3, CasePath::FULL_SYMBOLIC, t, reg);
    PhiResult trans = compute_phi(3, CasePath::TRANSCRIBED_INTEGRAND, t, reg);

    // frozen engine values, each cross-checked numerically by the quadrature
    // oracle above: full path (3/16) pi O1 T - (3/8) pi O1 N, transcribed
    // path -(3/16) pi O1 T + (i/2) pi O1 N.
    CoeffPoly piT = CoeffPoly::pi() * CoeffPoly::omega(1) * CoeffPoly::t_sym();
    CoeffPoly piN = CoeffPoly::pi() * CoeffPoly::omega(1) * CoeffPoly::n_sym();
    CHECK(full.total == piT.scaled(gr(3, 16)) + piN.scaled(gr(-3, 8)));
    CHECK(trans.total == piT.scaled(gr(-3, 16)) + piN.scaled(gi(1, 2)));
}

TEST_CASE("interior coefficients") {
    InteriorTerm t4 = interior_term(4);
    CHECK(t4.einstein_coeff == CoeffPoly::pi(2).scaled(gr(4, 3)));
    CHECK(t4.scalar_coeff == CoeffPoly::pi(2));
    InteriorTerm t6 = interior_term(6);
    CHECK(t6.einstein_coeff == CoeffPoly::pi(3).scaled(gr(4, 3)));
    CHECK(t6.scalar_coeff == CoeffPoly::pi(3));
    CHECK_THROWS_AS(interior_term(3), NoInteriorTerm);
    CHECK_THROWS_AS(interior_term(5), UnsupportedDimension);
}
