/** Words in abstract Clifford vectors and opaque factors, with CoeffPoly
 * weights. Multiplication concatenates words; relations are applied only by
 * the trace functional and by the explicit normal-ordering pass.
 */
#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "kkw/coeff_poly.hpp"

namespace kkw {

struct VectorSymbol {
    enum class Kind { XIP, DXN, DXIP, AUX };
    Kind kind = Kind::XIP;
    int index = 0;  // AUX slot

    static VectorSymbol xip() { return {Kind::XIP, 0}; }
    static VectorSymbol dxn() { return {Kind::DXN, 0}; }
    static VectorSymbol dxip() { return {Kind::DXIP, 0}; }
    static VectorSymbol aux(int k) { return {Kind::AUX, k}; }

    auto tie() const { return std::make_tuple(static_cast<int>(kind), index); }
    bool operator==(const VectorSymbol& o) const { return tie() == o.tie(); }
    bool operator<(const VectorSymbol& o) const { return tie() < o.tie(); }

    std::string to_string() const {
        switch (kind) {
            case Kind::XIP: return "XIP";
            case Kind::DXN: return "DXN";
            case Kind::DXIP: return "DXIP";
            case Kind::AUX: return "AUX" + std::to_string(index);
        }
        return {};
    }
};

/// A word letter: either a Clifford vector c(v) or an opaque operator factor.
struct Factor {
    bool opaque = false;
    VectorSymbol vec;
    std::string name;  // opaque payload

    static Factor vector(VectorSymbol v) { return {false, v, {}}; }
    static Factor make_opaque(std::string n) { return {true, {}, std::move(n)}; }

    auto tie() const { return std::make_tuple(opaque, vec, name); }
    bool operator==(const Factor& o) const { return tie() == o.tie(); }
    bool operator<(const Factor& o) const { return tie() < o.tie(); }

    std::string to_string() const { return opaque ? name : vec.to_string(); }
};

using Word = std::vector<Factor>;

inline std::string word_to_string(const Word& w) {
    if (w.empty()) return "id";
    std::string out;
    for (const auto& f : w) {
        if (!out.empty()) out += "*";
        out += f.to_string();
    }
    return out;
}

inline bool word_has_opaque(const Word& w) {
    for (const auto& f : w)
        if (f.opaque) return true;
    return false;
}

class CliffordExpr {
public:
    CliffordExpr() = default;

    static CliffordExpr identity(CoeffPoly c = CoeffPoly(1)) {
        CliffordExpr e;
        e.add(Word{}, std::move(c));
        return e;
    }
    static CliffordExpr vector(VectorSymbol v, CoeffPoly c = CoeffPoly(1)) {
        CliffordExpr e;
        e.add(Word{Factor::vector(v)}, std::move(c));
        return e;
    }
    static CliffordExpr opaque(const std::string& name, CoeffPoly c = CoeffPoly(1)) {
        CliffordExpr e;
        e.add(Word{Factor::make_opaque(name)}, std::move(c));
        return e;
    }
    static CliffordExpr word(Word w, CoeffPoly c = CoeffPoly(1)) {
        CliffordExpr e;
        e.add(std::move(w), std::move(c));
        return e;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, CoeffPoly>& terms() const { return terms_; }

    void add(Word w, CoeffPoly c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(std::move(w), std::move(c));
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    friend CliffordExpr operator+(const CliffordExpr& a, const CliffordExpr& b) {
        CliffordExpr r = a;
        for (auto& [w, c] : b.terms_) r.add(w, c);
        return r;
    }
    friend CliffordExpr operator-(const CliffordExpr& a, const CliffordExpr& b) {
        return a + b.scaled(CoeffPoly(-1));
    }
    CliffordExpr& operator+=(const CliffordExpr& o) { *this = *this + o; return *this; }
    CliffordExpr& operator-=(const CliffordExpr& o) { *this = *this - o; return *this; }

    /// Bilinear word concatenation; no anticommutation rewriting happens here.
    friend CliffordExpr operator*(const CliffordExpr& a, const CliffordExpr& b) {
        CliffordExpr r;
        for (auto& [wa, ca] : a.terms_)
            for (auto& [wb, cb] : b.terms_) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.add(std::move(w), ca * cb);
            }
        return r;
    }
    CliffordExpr& operator*=(const CliffordExpr& o) { *this = *this * o; return *this; }

    CliffordExpr scaled(const CoeffPoly& c) const {
        CliffordExpr r;
        for (auto& [w, cc] : terms_) r.add(w, cc * c);
        return r;
    }
    CliffordExpr scaled(const GaussianRational& g) const { return scaled(CoeffPoly(g)); }

    bool operator==(const CliffordExpr& o) const { return terms_ == o.terms_; }

    bool has_opaque() const {
        for (auto& [w, c] : terms_)
            if (word_has_opaque(w)) return true;
        return false;
    }

    /// Leibniz substitution: sum over single-occurrence replacements of `from`
    /// by `to` in each word (the derivative of a product of frame factors).
    CliffordExpr derive_vector(VectorSymbol from, VectorSymbol to) const {
        CliffordExpr r;
        for (auto& [w, c] : terms_)
            for (size_t i = 0; i < w.size(); ++i)
                if (!w[i].opaque && w[i].vec == from) {
                    Word nw = w;
                    nw[i].vec = to;
                    r.add(std::move(nw), c);
                }
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto& [w, c] : terms_) {
            if (!out.empty()) out += "  +  ";
            out += "[" + c.to_string() + "] " + word_to_string(w);
        }
        return out;
    }

private:
    std::map<Word, CoeffPoly> terms_;
};

}  // namespace kkw
