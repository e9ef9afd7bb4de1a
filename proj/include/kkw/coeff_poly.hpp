/** The coefficient ring: multivariate polynomials over Gaussian rationals
 * in named scalar symbols (h'(0), pi, sphere volumes, contraction symbols,
 * opaque placeholders). Every boundary-term result lives here.
 *
 * Canonical string grammar (bijective with the value):
 *   poly  := "0" | term (" + " term)*
 *   term  := "(" gauss ")" ("*" sym ("^" k)?)*
 *   gauss := re | im "i" | re ("+"|"-") |im| "i"      (rationals as "p" or "p/q")
 *   sym   := "HP" | "PI" | "OMEGA" m | "T" | "N" | "C0" | "OPAQUE(" name ")"
 * with symbols ordered HP < PI < OMEGA(m) < T < N < C0 < OPAQUE(name).
 */
#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kkw/gaussian.hpp"

namespace kkw {

struct ScalarSymbol {
    enum class Kind { HP, PI, OMEGA, T, N, C0, OPAQUE };
    Kind kind = Kind::HP;
    int index = 0;       // OMEGA sphere dimension m >= 1
    std::string name;    // OPAQUE payload

    static ScalarSymbol hp() { return {Kind::HP, 0, {}}; }
    static ScalarSymbol pi() { return {Kind::PI, 0, {}}; }
    static ScalarSymbol omega(int m) {
        if (m < 1) throw std::invalid_argument("OMEGA index must be >= 1");
        return {Kind::OMEGA, m, {}};
    }
    static ScalarSymbol t() { return {Kind::T, 0, {}}; }
    static ScalarSymbol n() { return {Kind::N, 0, {}}; }
    static ScalarSymbol c0() { return {Kind::C0, 0, {}}; }
    static ScalarSymbol opaque(std::string name) { return {Kind::OPAQUE, 0, std::move(name)}; }

    auto tie() const { return std::make_tuple(static_cast<int>(kind), index, name); }
    bool operator==(const ScalarSymbol& o) const { return tie() == o.tie(); }
    bool operator<(const ScalarSymbol& o) const { return tie() < o.tie(); }

    std::string to_string() const {
        switch (kind) {
            case Kind::HP: return "HP";
            case Kind::PI: return "PI";
            case Kind::OMEGA: return "OMEGA" + std::to_string(index);
            case Kind::T: return "T";
            case Kind::N: return "N";
            case Kind::C0: return "C0";
            case Kind::OPAQUE: return "OPAQUE(" + name + ")";
        }
        return {};
    }
};

/// Sorted (symbol, exponent) pairs, exponents > 0; empty = the unit monomial.
struct Monomial {
    std::vector<std::pair<ScalarSymbol, int>> factors;

    bool operator==(const Monomial& o) const { return factors == o.factors; }
    bool operator<(const Monomial& o) const {
        size_t n = std::min(factors.size(), o.factors.size());
        for (size_t i = 0; i < n; ++i) {
            if (!(factors[i].first == o.factors[i].first))
                return factors[i].first < o.factors[i].first;
            if (factors[i].second != o.factors[i].second)
                return factors[i].second > o.factors[i].second;  // higher power first
        }
        return factors.size() < o.factors.size();
    }

    Monomial times(const Monomial& o) const {
        Monomial r;
        size_t i = 0, j = 0;
        while (i < factors.size() || j < o.factors.size()) {
            if (j == o.factors.size() || (i < factors.size() && factors[i].first < o.factors[j].first))
                r.factors.push_back(factors[i++]);
            else if (i == factors.size() || o.factors[j].first < factors[i].first)
                r.factors.push_back(o.factors[j++]);
            else {
                r.factors.emplace_back(factors[i].first, factors[i].second + o.factors[j].second);
                ++i; ++j;
            }
        }
        return r;
    }

    bool contains(ScalarSymbol::Kind kind) const {
        for (auto& [s, e] : factors)
            if (s.kind == kind) return true;
        return false;
    }

    std::string to_string() const {
        std::string out;
        for (auto& [s, e] : factors) {
            out += "*" + s.to_string();
            if (e > 1) out += "^" + std::to_string(e);
        }
        return out;
    }
};

class CoeffPoly {
public:
    CoeffPoly() = default;
    CoeffPoly(GaussianRational c) {
        if (!c.is_zero()) terms_[Monomial{}] = std::move(c);
    }
    CoeffPoly(long long c) : CoeffPoly(GaussianRational(c)) {}

    static CoeffPoly symbol(ScalarSymbol s, int exp = 1) {
        CoeffPoly p;
        if (exp != 0) p.terms_[Monomial{{{std::move(s), exp}}}] = GaussianRational(1);
        else p = CoeffPoly(1);
        return p;
    }
    static CoeffPoly hp() { return symbol(ScalarSymbol::hp()); }
    static CoeffPoly pi(int exp = 1) { return symbol(ScalarSymbol::pi(), exp); }
    static CoeffPoly omega(int m) { return symbol(ScalarSymbol::omega(m)); }
    static CoeffPoly t_sym() { return symbol(ScalarSymbol::t()); }
    static CoeffPoly n_sym() { return symbol(ScalarSymbol::n()); }
    static CoeffPoly c0() { return symbol(ScalarSymbol::c0()); }
    static CoeffPoly opaque(const std::string& name) { return symbol(ScalarSymbol::opaque(name)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.factors.empty());
    }
    GaussianRational constant_value() const {
        if (terms_.empty()) return {};
        if (!is_constant()) throw std::logic_error("CoeffPoly: not a constant");
        return terms_.begin()->second;
    }
    const std::map<Monomial, GaussianRational>& terms() const { return terms_; }

    friend CoeffPoly operator+(const CoeffPoly& a, const CoeffPoly& b) {
        CoeffPoly r = a;
        for (auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend CoeffPoly operator-(const CoeffPoly& a, const CoeffPoly& b) { return a + (-b); }
    CoeffPoly operator-() const {
        CoeffPoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
        CoeffPoly r;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
        return r;
    }
    CoeffPoly& operator+=(const CoeffPoly& o) { *this = *this + o; return *this; }
    CoeffPoly& operator-=(const CoeffPoly& o) { *this = *this - o; return *this; }
    CoeffPoly& operator*=(const CoeffPoly& o) { *this = *this * o; return *this; }

    CoeffPoly scaled(const GaussianRational& g) const {
        CoeffPoly r;
        if (g.is_zero()) return r;
        for (auto& [m, c] : terms_) r.terms_[m] = c * g;
        return r;
    }
    /// Division by a nonzero constant; polynomial divisors are not supported.
    CoeffPoly divided(const GaussianRational& g) const {
        return scaled(GaussianRational(1) / g);
    }

    bool operator==(const CoeffPoly& o) const { return terms_ == o.terms_; }

    bool contains(ScalarSymbol::Kind kind) const {
        for (auto& [m, c] : terms_)
            if (m.contains(kind)) return true;
        return false;
    }
    bool contains_opaque(const std::string& name) const {
        for (auto& [m, c] : terms_)
            for (auto& [s, e] : m.factors)
                if (s.kind == ScalarSymbol::Kind::OPAQUE && s.name == name) return true;
        return false;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto& [m, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.to_string() + ")" + m.to_string();
        }
        return out;
    }

    /// Numeric evaluation with a symbol valuation; throws on unvalued symbols.
    std::complex<double> eval(const std::map<std::string, std::complex<double>>& vals) const {
        std::complex<double> sum = 0;
        for (auto& [m, c] : terms_) {
            std::complex<double> t = c.to_complex();
            for (auto& [s, e] : m.factors) {
                auto it = vals.find(s.to_string());
                if (it == vals.end())
                    throw std::invalid_argument("CoeffPoly::eval: no value for " + s.to_string());
                for (int k = 0; k < e; ++k) t *= it->second;
            }
            sum += t;
        }
        return sum;
    }

    static CoeffPoly parse(const std::string& text);

private:
    std::map<Monomial, GaussianRational> terms_;

    void add_term(const Monomial& m, const GaussianRational& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[m] = c;
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
};

namespace detail {

inline Rational parse_rational(const std::string& s, size_t& pos) {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    }
    return Rational::from_string(s.substr(start, pos - start));
}

inline GaussianRational parse_gauss(const std::string& s, size_t& pos) {
    Rational first = parse_rational(s, pos);
    if (pos < s.size() && s[pos] == 'i') {
        ++pos;
        return GaussianRational(Rational(0), first);
    }
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        Rational second = parse_rational(s, pos);
        if (pos >= s.size() || s[pos] != 'i')
            throw std::invalid_argument("parse: expected 'i' after imaginary part");
        ++pos;
        return GaussianRational(first, second);
    }
    return GaussianRational(first);
}

inline ScalarSymbol parse_symbol(const std::string& s, size_t& pos) {
    auto starts = [&](const char* p) { return s.compare(pos, std::string(p).size(), p) == 0; };
    if (starts("HP")) { pos += 2; return ScalarSymbol::hp(); }
    if (starts("PI")) { pos += 2; return ScalarSymbol::pi(); }
    if (starts("OMEGA")) {
        pos += 5;
        size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        return ScalarSymbol::omega(std::stoi(s.substr(start, pos - start)));
    }
    if (starts("T")) { pos += 1; return ScalarSymbol::t(); }
    if (starts("N")) { pos += 1; return ScalarSymbol::n(); }
    if (starts("C0")) { pos += 2; return ScalarSymbol::c0(); }
    if (starts("OPAQUE(")) {
        pos += 7;
        int depth = 1;
        size_t start = pos;
        while (pos < s.size() && depth > 0) {
            if (s[pos] == '(') ++depth;
            if (s[pos] == ')') --depth;
            ++pos;
        }
        if (depth != 0) throw std::invalid_argument("parse: unbalanced OPAQUE name");
        return ScalarSymbol::opaque(s.substr(start, pos - 1 - start));
    }
    throw std::invalid_argument("parse: unknown symbol at '" + s.substr(pos) + "'");
}

}  // namespace detail

inline CoeffPoly CoeffPoly::parse(const std::string& text) {
    if (text == "0") return {};
    CoeffPoly out;
    size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != '(') throw std::invalid_argument("parse: expected '('");
        ++pos;
        GaussianRational coeff = detail::parse_gauss(text, pos);
        if (pos >= text.size() || text[pos] != ')') throw std::invalid_argument("parse: expected ')'");
        ++pos;
        CoeffPoly term(coeff);
        while (pos < text.size() && text[pos] == '*') {
            ++pos;
            ScalarSymbol s = detail::parse_symbol(text, pos);
            int exp = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                size_t start = pos;
                while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
                exp = std::stoi(text.substr(start, pos - start));
            }
            term *= CoeffPoly::symbol(s, exp);
        }
        out += term;
        if (pos < text.size()) {
            if (text.compare(pos, 3, " + ") != 0)
                throw std::invalid_argument("parse: expected ' + '");
            pos += 3;
        }
    }
    return out;
}

}  // namespace kkw
