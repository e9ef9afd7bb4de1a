/** Reference values for the verification targets, transcribed verbatim from
 * the reference text with their section/equation tags. They are comparison
 * data only and never feed the computation paths.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kkw/pipeline.hpp"

namespace kkw {

struct PaperValue {
    std::string label;  // case label or "total"
    CoeffPoly value;
    std::string citation;
    std::vector<std::string> notes;
};

struct PaperInterior {
    CoeffPoly einstein_coeff;
    CoeffPoly scalar_coeff;
    std::string citation;
};

/// A bracketed Cauchy-derivative step printed by the reference, with the
/// value its surrounding evaluation implies. Used to localize divergences.
struct ResidueStepSpec {
    std::string description;
    XiRational bracket;           // the regular part inside [...]
    int derivative_order = 0;     // [...]^{(order)} evaluated at xi = i
    GaussianRational implied;     // value needed for the printed result
    std::string implied_from;
};

namespace paper_detail {

inline GaussianRational gr(long long n, long long d = 1) {
    return GaussianRational(Rational(n, d));
}
inline GaussianRational gi(long long n, long long d = 1) {
    return GaussianRational(Rational(0), Rational(n, d));
}

inline CoeffPoly tpart(GaussianRational c, int pi_pow, int omega, bool hp = true) {
    CoeffPoly p = CoeffPoly::pi(pi_pow) * CoeffPoly::omega(omega) * CoeffPoly::t_sym();
    if (hp) p *= CoeffPoly::hp();
    return p.scaled(c);
}
inline CoeffPoly npart(GaussianRational c, int pi_pow, int omega, bool hp = true) {
    CoeffPoly p = CoeffPoly::pi(pi_pow) * CoeffPoly::omega(omega) * CoeffPoly::n_sym();
    if (hp) p *= CoeffPoly::hp();
    return p.scaled(c);
}

}  // namespace paper_detail

inline std::vector<PaperValue> paper_values(int dim) {
    using namespace paper_detail;
    std::vector<PaperValue> v;
    switch (dim) {
        case 3: {
            CoeffPoly total = tpart(gi(1, 3), 2, 2, false) + npart(gi(3, 4), 1, 2, false);
            v.push_back({"single", total, "S4, Theorem 4.1", {}});
            v.push_back({"total", total, "S4, Theorem 4.1", {}});
            return v;
        }
        case 4: {
            v.push_back({"aI", CoeffPoly(), "S3, case a) I, below (b25)", {}});
            v.push_back({"aII", tpart(gr(-592, 3), 2, 3) + npart(gr(-461, 4) + gi(-23, 4), 1, 3),
                         "S3, (35)", {}});
            v.push_back({"aIII", tpart(gi(5, 6), 2, 3) + npart(gi(5, 8), 1, 3), "S3, (41)", {}});
            v.push_back({"b", tpart(gr(55, 3), 2, 3) + npart(gr(-3, 8), 1, 3),
                         "S3, (41), second display",
                         {"the c0 term of the printed integrand is absent from the value"}});
            v.push_back({"c", tpart(gr(-35, 3) + gi(50, 3), 3, 3) + npart(gr(5) + gi(-137, 32), 2, 3),
                         "S3, (74)", {}});
            v.push_back({"total",
                         tpart(gr(-572, 3) + gi(35, 2), 2, 3) +
                             npart(gr(-1411, 12) + gi(27, 32), 1, 3),
                         "S3, (795), Theorem 3.2", {}});
            return v;
        }
        case 6: {
            v.push_back({"aI", CoeffPoly(), "S5, case a) I, below (c14)", {}});
            v.push_back({"aII", tpart(gr(-5925, 16) + gi(-877, 6), 2, 4) + npart(gi(311), 1, 4),
                         "S5, (c25)", {}});
            v.push_back({"aIII", tpart(gr(49, 3) + gi(86), 2, 3) + npart(gr(-17, 4) + gi(68), 1, 3),
                         "S5, (c35)",
                         {"printed with OMEGA3 in the six-dimensional case"}});
            v.push_back({"b", tpart(gr(-53, 3) + gi(-41, 6), 2, 3) + npart(gr(36) + gi(173, 4), 1, 3),
                         "S5, (c43)",
                         {"printed with OMEGA3 in the six-dimensional case"}});
            v.push_back({"c", tpart(gr(-775, 6) + gi(113), 2, 4) + npart(gr(171, 2) + gi(369, 8), 1, 4),
                         "S5, (c55)", {}});
            v.push_back({"total",
                         tpart(gr(-8013, 16) + gi(46), 2, 4) + npart(gr(475, 4) + gi(3747, 8), 1, 4),
                         "S5, (c01), Theorem 5.1", {}});
            return v;
        }
        default:
            throw UnsupportedDimension("paper_values: dim must be 3, 4 or 6");
    }
}

inline std::optional<PaperValue> paper_value(int dim, const std::string& label) {
    for (auto& pv : paper_values(dim))
        if (pv.label == label) return pv;
    return std::nullopt;
}

inline PaperInterior paper_interior(int dim) {
    using namespace paper_detail;
    if (dim == 4)
        return {CoeffPoly::pi(2).scaled(gr(4, 3)), CoeffPoly::pi(2), "S3, (a16)"};
    if (dim == 6)
        return {CoeffPoly::pi(3).scaled(gr(4, 3)), CoeffPoly::pi(3), "S5, (c13)"};
    throw NoInteriorTerm("paper_interior: stated for even dimensions only");
}

/// The two bracketed residue steps of the printed three-dimensional
/// evaluation, together with the values the theorem's coefficients imply:
///   T: -Omega2 (2 pi i/3!) (4 pi/3) [ (i-xi)/(xi+i)^2 ]^{(3)} = (i/3) pi^2 Omega2
///      requires the bracket to be -3/4,
///   N: +Omega2 (2 pi i/3!) [ (xi-i)/(xi+i)^2 ]^{(3)} = (3i/4) pi Omega2
///      requires the bracket to be 9/4.
inline std::vector<ResidueStepSpec> paper_residue_steps(int dim) {
    using namespace paper_detail;
    if (dim != 3) return {};
    std::vector<ResidueStepSpec> steps;
    steps.push_back({"tangential bracket [(i-xi_n)/(xi_n+i)^2]^(3) at xi_n=i",
                     XiRational::scalar_term({gi(1), gr(-1)}, 0, 2), 3, gr(-3, 4),
                     "solving -(2 pi i/3!)(4 pi/3) X = (i/3) pi^2 for X"});
    steps.push_back({"normal bracket [(xi_n-i)/(xi_n+i)^2]^(3) at xi_n=i",
                     XiRational::scalar_term({gi(-1), gr(1)}, 0, 2), 3, gr(9, 4),
                     "solving (2 pi i/3!) X = (3i/4) pi for X"});
    return steps;
}

}  // namespace kkw
