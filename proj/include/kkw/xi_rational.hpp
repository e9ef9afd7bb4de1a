/** Rational functions of the normal covariable xi_n.
 *
 * Every denominator is a product (xi_n - i)^a (xi_n + i)^b; with |xi'| = 1
 * substituted these are the only irreducible factors the boundary integrands
 * possess. Numerators are polynomials with CliffordExpr coefficients (the
 * left factor of a product keeps its coefficients on the left).
 *
 * pi^+ is the projection onto principal parts at xi_n = +i; the Gamma^+
 * integral is 2*pi*i times the residue there, computed through exact Cauchy
 * derivatives, never limits.
 */
#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kkw/clifford.hpp"

namespace kkw {

struct NonProperInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// binom(n, k) for integer n (possibly negative) and k >= 0.
inline Rational binomial(long long n, long long k) {
    if (k < 0) return Rational(0);
    if (k == 0) return Rational(1);
    if (n >= 0 && k > n) return Rational(0);
    BigInt num(1), den(1);
    for (long long j = 0; j < k; ++j) {
        num *= BigInt(n - j);
        den *= BigInt(j + 1);
    }
    return Rational(num, den);
}

/// Polynomial in xi_n with CliffordExpr coefficients.
class XiPoly {
public:
    XiPoly() = default;
    explicit XiPoly(CliffordExpr constant) {
        coeffs_.push_back(std::move(constant));
        trim();
    }

    static XiPoly monomial(int power, CliffordExpr c) {
        XiPoly p;
        p.coeffs_.assign(power + 1, CliffordExpr{});
        p.coeffs_[power] = std::move(c);
        p.trim();
        return p;
    }
    static XiPoly from_scalars(const std::vector<GaussianRational>& cs) {
        XiPoly p;
        for (auto& g : cs) p.coeffs_.push_back(CliffordExpr::identity(CoeffPoly(g)));
        p.trim();
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const CliffordExpr& coeff(size_t k) const {
        static const CliffordExpr zero{};
        return k < coeffs_.size() ? coeffs_[k] : zero;
    }

    friend XiPoly operator+(const XiPoly& x, const XiPoly& y) {
        XiPoly r;
        r.coeffs_.resize(std::max(x.coeffs_.size(), y.coeffs_.size()));
        for (size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = x.coeff(k) + y.coeff(k);
        r.trim();
        return r;
    }
    friend XiPoly operator-(const XiPoly& x, const XiPoly& y) {
        return x + y.scaled(CoeffPoly(-1));
    }
    friend XiPoly operator*(const XiPoly& x, const XiPoly& y) {
        XiPoly r;
        if (x.is_zero() || y.is_zero()) return r;
        r.coeffs_.resize(x.coeffs_.size() + y.coeffs_.size() - 1);
        for (size_t p = 0; p < x.coeffs_.size(); ++p)
            for (size_t q = 0; q < y.coeffs_.size(); ++q)
                r.coeffs_[p + q] += x.coeffs_[p] * y.coeffs_[q];
        r.trim();
        return r;
    }
    XiPoly& operator+=(const XiPoly& o) { *this = *this + o; return *this; }

    XiPoly scaled(const CoeffPoly& c) const {
        XiPoly r = *this;
        for (auto& cc : r.coeffs_) cc = cc.scaled(c);
        r.trim();
        return r;
    }
    XiPoly scaled(const GaussianRational& g) const { return scaled(CoeffPoly(g)); }

    /// Coefficient-wise map (used for frame derivatives of the numerator).
    template <typename F>
    XiPoly map(F&& f) const {
        XiPoly r = *this;
        for (auto& c : r.coeffs_) c = f(c);
        r.trim();
        return r;
    }

    XiPoly derivative() const {
        XiPoly r;
        for (size_t k = 1; k < coeffs_.size(); ++k)
            r.coeffs_.push_back(coeffs_[k].scaled(GaussianRational(static_cast<long long>(k))));
        r.trim();
        return r;
    }

    CliffordExpr eval(const GaussianRational& x) const {
        CliffordExpr acc;
        GaussianRational p(1);
        for (size_t k = 0; k < coeffs_.size(); ++k) {
            acc += coeffs_[k].scaled(p);
            p *= x;
        }
        return acc;
    }

    /// Coefficients in powers of (xi - x0), lowest order first.
    std::vector<CliffordExpr> taylor_at(const GaussianRational& x0) const {
        std::vector<CliffordExpr> out(coeffs_.empty() ? 1 : coeffs_.size());
        for (size_t p = 0; p < coeffs_.size(); ++p) {
            for (size_t r = 0; r <= p; ++r) {
                GaussianRational c = GaussianRational(binomial(p, r)) *
                                     x0.pow(static_cast<long long>(p - r));
                out[r] += coeffs_[p].scaled(c);
            }
        }
        while (out.size() > 1 && out.back().is_zero()) out.pop_back();
        return out;
    }

    bool operator==(const XiPoly& o) const { return coeffs_ == o.coeffs_; }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "xi^" + std::to_string(k) + "*(" + coeffs_[k].to_string() + ")";
        }
        return s.empty() ? "0" : s;
    }

private:
    std::vector<CliffordExpr> coeffs_;
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
};

/// Scalar coefficients of the monic polynomial (xi-i)^a (xi+i)^b.
inline std::vector<GaussianRational> denominator_coeffs(int a, int b) {
    std::vector<GaussianRational> r{GaussianRational(1)};
    auto mul_linear = [&](GaussianRational root) {
        // multiply by (xi - root)
        std::vector<GaussianRational> nr(r.size() + 1);
        for (size_t k = 0; k < r.size(); ++k) {
            nr[k + 1] += r[k];
            nr[k] -= r[k] * root;
        }
        r = std::move(nr);
    };
    for (int k = 0; k < a; ++k) mul_linear(GaussianRational::i());
    for (int k = 0; k < b; ++k) mul_linear(-GaussianRational::i());
    return r;
}

/// Principal parts at one pole: coeff_of_pole_order[s-1] / (xi - pole)^s.
struct PrincipalPart {
    std::vector<CliffordExpr> coeffs;
    bool is_zero() const {
        for (auto& c : coeffs)
            if (!c.is_zero()) return false;
        return true;
    }
};

struct PartialFractions {
    XiPoly poly_part;
    PrincipalPart at_i;
    PrincipalPart at_minus_i;
};

class XiRational {
public:
    XiRational() = default;

    static XiRational term(XiPoly num, int a, int b) {
        if (a < 0 || b < 0) throw std::invalid_argument("XiRational: negative pole order");
        XiRational f;
        f.add_term(std::move(num), a, b);
        return f;
    }
    static XiRational scalar_term(const std::vector<GaussianRational>& num, int a, int b) {
        return term(XiPoly::from_scalars(num), a, b);
    }
    static XiRational constant(CliffordExpr c) { return term(XiPoly(std::move(c)), 0, 0); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<int, int>, XiPoly>& terms() const { return terms_; }

    friend XiRational operator+(const XiRational& x, const XiRational& y) {
        XiRational r = x;
        for (auto& [k, num] : y.terms_) r.add_term(num, k.first, k.second);
        return r;
    }
    friend XiRational operator-(const XiRational& x, const XiRational& y) {
        return x + y.scaled(CoeffPoly(-1));
    }
    friend XiRational operator*(const XiRational& x, const XiRational& y) {
        XiRational r;
        for (auto& [ka, na] : x.terms_)
            for (auto& [kb, nb] : y.terms_)
                r.add_term(na * nb, ka.first + kb.first, ka.second + kb.second);
        return r;
    }
    XiRational& operator+=(const XiRational& o) { *this = *this + o; return *this; }
    XiRational& operator-=(const XiRational& o) { *this = *this - o; return *this; }

    XiRational scaled(const CoeffPoly& c) const {
        XiRational r;
        for (auto& [k, num] : terms_) r.add_term(num.scaled(c), k.first, k.second);
        return r;
    }
    XiRational scaled(const GaussianRational& g) const { return scaled(CoeffPoly(g)); }

    /// Coefficient-wise map over numerator CliffordExprs.
    template <typename F>
    XiRational map_coeffs(F&& f) const {
        XiRational r;
        for (auto& [k, num] : terms_) r.add_term(num.map(f), k.first, k.second);
        return r;
    }

    /// d/dxi_n, exact, by the quotient rule on each term.
    XiRational derivative() const {
        XiRational r;
        for (auto& [k, num] : terms_) {
            auto [a, b] = k;
            r.add_term(num.derivative(), a, b);
            if (a > 0) r.add_term(num.scaled(GaussianRational(-a)), a + 1, b);
            if (b > 0) r.add_term(num.scaled(GaussianRational(-b)), a, b + 1);
        }
        return r;
    }
    XiRational derivative(int k) const {
        XiRational r = *this;
        for (int j = 0; j < k; ++j) r = r.derivative();
        return r;
    }

    /// Splits into polynomial part and proper part (numerator degree < a+b).
    void split(XiPoly& poly, XiRational& proper) const {
        poly = XiPoly{};
        proper = XiRational{};
        for (auto& [k, num] : terms_) {
            auto [a, b] = k;
            if (a + b == 0) {
                poly += num;
                continue;
            }
            if (num.degree() < a + b) {
                proper.add_term(num, a, b);
                continue;
            }
            XiPoly den = XiPoly::from_scalars(denominator_coeffs(a, b));
            XiPoly rem = num, quot;
            while (!rem.is_zero() && rem.degree() >= a + b) {
                int shift = rem.degree() - (a + b);
                CliffordExpr lead = rem.coeff(rem.degree());
                quot += XiPoly::monomial(shift, lead);
                rem = rem - XiPoly::monomial(shift, lead) * den;
            }
            poly += quot;
            if (!rem.is_zero()) proper.add_term(rem, a, b);
        }
    }

    PartialFractions partial_fractions() const {
        PartialFractions out;
        XiRational proper;
        split(out.poly_part, proper);
        for (auto& [k, num] : proper.terms_) {
            auto [a, b] = k;
            accumulate_principal(num, a, b, GaussianRational::i(), out.at_i);
            accumulate_principal_swapped(num, a, b, out.at_minus_i);
        }
        for (auto& pp : {&out.at_i, &out.at_minus_i})
            while (!pp->coeffs.empty() && pp->coeffs.back().is_zero()) pp->coeffs.pop_back();
        return out;
    }

    /// Unique canonical representative: polynomial part plus principal parts.
    XiRational canonical() const {
        PartialFractions pf = partial_fractions();
        XiRational r;
        if (!pf.poly_part.is_zero()) r.add_term(pf.poly_part, 0, 0);
        for (size_t s = 0; s < pf.at_i.coeffs.size(); ++s)
            if (!pf.at_i.coeffs[s].is_zero())
                r.add_term(XiPoly(pf.at_i.coeffs[s]), static_cast<int>(s) + 1, 0);
        for (size_t s = 0; s < pf.at_minus_i.coeffs.size(); ++s)
            if (!pf.at_minus_i.coeffs[s].is_zero())
                r.add_term(XiPoly(pf.at_minus_i.coeffs[s]), 0, static_cast<int>(s) + 1);
        return r;
    }

    bool equals(const XiRational& o) const { return canonical().terms_ == o.canonical().terms_; }

    /// Recombined value of a PartialFractions decomposition (test oracle).
    static XiRational reconstruct(const PartialFractions& pf) {
        XiRational r;
        if (!pf.poly_part.is_zero()) r.add_term(pf.poly_part, 0, 0);
        for (size_t s = 0; s < pf.at_i.coeffs.size(); ++s)
            r.add_term(XiPoly(pf.at_i.coeffs[s]), static_cast<int>(s) + 1, 0);
        for (size_t s = 0; s < pf.at_minus_i.coeffs.size(); ++s)
            r.add_term(XiPoly(pf.at_minus_i.coeffs[s]), 0, static_cast<int>(s) + 1);
        return r;
    }

    /// Principal parts at +i. Throws NonProperInput if a polynomial part exists.
    XiRational pi_plus() const {
        PartialFractions pf = partial_fractions();
        if (!pf.poly_part.is_zero())
            throw NonProperInput("pi_plus: input has a polynomial part");
        XiRational r;
        for (size_t s = 0; s < pf.at_i.coeffs.size(); ++s)
            if (!pf.at_i.coeffs[s].is_zero())
                r.add_term(XiPoly(pf.at_i.coeffs[s]), static_cast<int>(s) + 1, 0);
        return r;
    }

    /// Principal parts at -i (the complement of pi_plus on proper functions).
    XiRational pi_minus() const {
        PartialFractions pf = partial_fractions();
        if (!pf.poly_part.is_zero())
            throw NonProperInput("pi_minus: input has a polynomial part");
        XiRational r;
        for (size_t s = 0; s < pf.at_minus_i.coeffs.size(); ++s)
            if (!pf.at_minus_i.coeffs[s].is_zero())
                r.add_term(XiPoly(pf.at_minus_i.coeffs[s]), 0, static_cast<int>(s) + 1);
        return r;
    }

    /// Residue at +i (coefficient of (xi-i)^{-1}); polynomial parts and the
    /// pole at -i contribute nothing to the Gamma^+ integral.
    CliffordExpr residue_at_i() const {
        PartialFractions pf = partial_fractions();
        return pf.at_i.coeffs.empty() ? CliffordExpr{} : pf.at_i.coeffs[0];
    }

    /// Integral over Gamma^+, exactly 2*pi*i times the residue at +i; the
    /// factor pi stays symbolic in the coefficient ring.
    CliffordExpr contour_gamma_plus() const {
        CliffordExpr res = residue_at_i();
        return res.scaled(CoeffPoly::pi().scaled(GaussianRational(Rational(0), Rational(2))));
    }

    CliffordExpr eval(const GaussianRational& x) const {
        CliffordExpr acc;
        for (auto& [k, num] : terms_) {
            auto [a, b] = k;
            GaussianRational den = (x - GaussianRational::i()).pow(a) *
                                   (x + GaussianRational::i()).pow(b);
            acc += num.eval(x).scaled(GaussianRational(1) / den);
        }
        return acc;
    }

    /// Numeric value for scalar-coefficient rationals (identity words only).
    std::complex<double> eval_scalar(std::complex<double> x,
                                     const std::map<std::string, std::complex<double>>& vals = {}) const {
        std::complex<double> acc = 0.0;
        const std::complex<double> I(0.0, 1.0);
        for (auto& [k, num] : terms_) {
            auto [a, b] = k;
            std::complex<double> v = 0.0, p = 1.0;
            for (int d = 0; d <= num.degree(); ++d) {
                const CliffordExpr& c = num.coeff(d);
                std::complex<double> cv = 0.0;
                for (auto& [w, poly] : c.terms()) {
                    if (!w.empty())
                        throw std::invalid_argument("eval_scalar: non-scalar Clifford coefficient");
                    cv += poly.eval(vals);
                }
                v += cv * p;
                p *= x;
            }
            acc += v / (std::pow(x - I, a) * std::pow(x + I, b));
        }
        return acc;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto& [k, num] : terms_) {
            if (!s.empty()) s += "  +  ";
            s += "{" + num.to_string() + "} / ((xi-i)^" + std::to_string(k.first) + "(xi+i)^" +
                 std::to_string(k.second) + ")";
        }
        return s;
    }

private:
    // (a, b) -> numerator; a = pole order at +i, b = pole order at -i
    std::map<std::pair<int, int>, XiPoly> terms_;

    void add_term(XiPoly num, int a, int b) {
        if (num.is_zero()) return;
        auto key = std::make_pair(a, b);
        auto it = terms_.find(key);
        if (it == terms_.end())
            terms_.emplace(key, std::move(num));
        else {
            it->second += num;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // principal part at +i of num / ((xi-i)^a (xi+i)^b)
    static void accumulate_principal(const XiPoly& num, int a, int b,
                                     const GaussianRational& i_val, PrincipalPart& out) {
        if (a == 0) return;
        std::vector<CliffordExpr> taylor = num.taylor_at(i_val);
        // series of (xi+i)^{-b} around +i: sum_m binom(b+m-1,m) (-1)^m (2i)^{-b-m} (xi-i)^m
        GaussianRational two_i = GaussianRational(Rational(0), Rational(2));
        if (static_cast<int>(out.coeffs.size()) < a) out.coeffs.resize(a);
        for (int r = 0; r < a; ++r) {  // power of (xi-i) in num*(xi+i)^{-b}
            CliffordExpr conv;
            for (int t = 0; t <= r && t < static_cast<int>(taylor.size()); ++t) {
                int m = r - t;
                GaussianRational s = GaussianRational(binomial(b + m - 1, m)) *
                                     GaussianRational(m % 2 ? -1 : 1) *
                                     (GaussianRational(1) / two_i.pow(b + m));
                conv += taylor[t].scaled(s);
            }
            out.coeffs[a - 1 - r] += conv;  // pole order a - r
        }
    }

    // principal part at -i: mirror with the roles of the poles swapped
    static void accumulate_principal_swapped(const XiPoly& num, int a, int b, PrincipalPart& out) {
        if (b == 0) return;
        GaussianRational minus_i = -GaussianRational::i();
        std::vector<CliffordExpr> taylor = num.taylor_at(minus_i);
        GaussianRational minus_two_i = GaussianRational(Rational(0), Rational(-2));
        if (static_cast<int>(out.coeffs.size()) < b) out.coeffs.resize(b);
        for (int r = 0; r < b; ++r) {
            CliffordExpr conv;
            for (int t = 0; t <= r && t < static_cast<int>(taylor.size()); ++t) {
                int m = r - t;
                GaussianRational s = GaussianRational(binomial(a + m - 1, m)) *
                                     GaussianRational(m % 2 ? -1 : 1) *
                                     (GaussianRational(1) / minus_two_i.pow(a + m));
                conv += taylor[t].scaled(s);
            }
            out.coeffs[b - 1 - r] += conv;
        }
    }
};

}  // namespace kkw
