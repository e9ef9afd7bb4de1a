/** Exact moments of tangential covector monomials over the unit sphere S^m
 * and the contraction of X/Y-weighted sums into the T and N symbols.
 */
#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "kkw/coeff_poly.hpp"

namespace kkw {

struct UnsupportedDegree : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Integral of xi^alpha over S^m (in R^{m+1}), total measure OMEGA(m).
/// Zero when any exponent is odd; else OMEGA(m) * prod (a_i-1)!! divided by
/// prod_{r < |alpha|/2} (m+1+2r).
inline CoeffPoly sphere_moment(const std::vector<int>& alpha, int m) {
    if (m < 1 || m > 4) throw std::invalid_argument("sphere_moment: m must be 1..4");
    if (static_cast<int>(alpha.size()) > m + 1)
        throw std::invalid_argument("sphere_moment: more exponents than coordinates");
    long long total = 0;
    for (int a : alpha) {
        if (a < 0) throw std::invalid_argument("sphere_moment: negative exponent");
        total += a;
        if (a % 2 == 1) return CoeffPoly();
    }
    if (total > 4) throw UnsupportedDegree("sphere_moment: |alpha| > 4 unsupported");
    Rational num(1), den(1);
    for (int a : alpha)
        for (int k = a - 1; k >= 1; k -= 2) num *= Rational(k);
    for (long long r = 0; r < total / 2; ++r) den *= Rational(m + 1 + 2 * r);
    return CoeffPoly::omega(m).scaled(GaussianRational(num / den));
}

/// Tangential monomial patterns the pipeline integrates over the sphere.
/// The mixed sums and opaque-weighted odd monomials vanish by parity; the
/// drop happens here, at contraction time, never earlier.
struct TangentialPattern {
    enum class Kind {
        SUM_XY_JL,   // sum_{j,l<n} X_j Y_l xi_j xi_l
        SUM_XJ_YN,   // sum_{j<n} X_j Y_n xi_j
        SUM_XN_YL,   // sum_{l<n} X_n Y_l xi_l
        CONST_NN,    // X_n Y_n
        PURE,        // xi^alpha, no X/Y weight (alpha empty = constant 1)
        ODD_OPAQUE,  // xi'-odd monomial with an opaque operator weight
    };
    Kind kind = Kind::PURE;
    std::vector<int> alpha;  // PURE only
    std::string note;        // ODD_OPAQUE provenance

    static TangentialPattern xy() { return {Kind::SUM_XY_JL, {}, {}}; }
    static TangentialPattern xn() { return {Kind::SUM_XJ_YN, {}, {}}; }
    static TangentialPattern nx() { return {Kind::SUM_XN_YL, {}, {}}; }
    static TangentialPattern nn() { return {Kind::CONST_NN, {}, {}}; }
    static TangentialPattern one() { return {Kind::PURE, {}, {}}; }
    static TangentialPattern pure(std::vector<int> a) { return {Kind::PURE, std::move(a), {}}; }
    static TangentialPattern odd_opaque(std::string note) {
        return {Kind::ODD_OPAQUE, {}, std::move(note)};
    }

    bool trivial() const { return kind == Kind::PURE && alpha.empty(); }

    auto tie() const { return std::make_tuple(static_cast<int>(kind), alpha, note); }
    bool operator==(const TangentialPattern& o) const { return tie() == o.tie(); }
    bool operator<(const TangentialPattern& o) const { return tie() < o.tie(); }

    /// Pattern of a product; only products with a trivial side (or two PURE
    /// monomials) occur in the pipeline.
    static TangentialPattern merge(const TangentialPattern& p, const TangentialPattern& q) {
        if (p.trivial()) return q;
        if (q.trivial()) return p;
        if (p.kind == Kind::PURE && q.kind == Kind::PURE) {
            std::vector<int> a = p.alpha, b = q.alpha;
            if (a.size() < b.size()) a.resize(b.size(), 0);
            for (size_t k = 0; k < b.size(); ++k) a[k] += b[k];
            return pure(std::move(a));
        }
        throw std::invalid_argument("TangentialPattern: unsupported product " + p.to_string() +
                                    " * " + q.to_string());
    }

    std::string to_string() const {
        switch (kind) {
            case Kind::SUM_XY_JL: return "sum_jl XjYl xi_j xi_l";
            case Kind::SUM_XJ_YN: return "sum_j XjYn xi_j";
            case Kind::SUM_XN_YL: return "sum_l XnYl xi_l";
            case Kind::CONST_NN: return "XnYn";
            case Kind::ODD_OPAQUE: return "odd-opaque(" + note + ")";
            case Kind::PURE: {
                if (alpha.empty()) return "1";
                std::string s = "xi^(";
                for (size_t i = 0; i < alpha.size(); ++i)
                    s += (i ? "," : "") + std::to_string(alpha[i]);
                return s + ")";
            }
        }
        return {};
    }
};

/// Sphere contraction of a pattern over S^m.
inline CoeffPoly contract_pattern(const TangentialPattern& p, int m) {
    using K = TangentialPattern::Kind;
    switch (p.kind) {
        case K::SUM_XY_JL:
            return (CoeffPoly::omega(m) * CoeffPoly::t_sym())
                .scaled(GaussianRational(Rational(1, m + 1)));
        case K::SUM_XJ_YN:
        case K::SUM_XN_YL:
        case K::ODD_OPAQUE:
            return CoeffPoly();
        case K::CONST_NN:
            return CoeffPoly::omega(m) * CoeffPoly::n_sym();
        case K::PURE:
            return sphere_moment(p.alpha, m);
    }
    return {};
}

}  // namespace kkw
