/** Symmetric pairing tables <v,w> feeding the Wick trace and the
 * normal-ordering relations c(v)c(w) + c(w)c(v) = -2<v,w>.
 *
 * At the boundary point the collar metric pins the table: the unit tangential
 * covector pairs to 1 with itself, dx_n is orthonormal to it, and the normal
 * derivative of the tangential covector pairs against it to h'(0)/2 (half the
 * normal derivative of |xi'|^2 = h(x_n)).
 */
#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "kkw/clifford.hpp"

namespace kkw {

class PairingTable {
public:
    void set(VectorSymbol a, VectorSymbol b, CoeffPoly value) {
        if (b < a) std::swap(a, b);
        table_[{a, b}] = std::move(value);
    }

    const CoeffPoly& get(VectorSymbol a, VectorSymbol b) const {
        if (b < a) std::swap(a, b);
        auto it = table_.find({a, b});
        if (it == table_.end())
            throw std::out_of_range("PairingTable: no entry for <" + a.to_string() + "," +
                                    b.to_string() + ">");
        return it->second;
    }

    bool has(VectorSymbol a, VectorSymbol b) const {
        if (b < a) std::swap(a, b);
        return table_.count({a, b}) > 0;
    }

private:
    std::map<std::pair<VectorSymbol, VectorSymbol>, CoeffPoly> table_;
};

/// Pairings at the boundary point x0 with |xi'| = 1.
inline PairingTable boundary_pairing_table() {
    PairingTable t;
    auto xip = VectorSymbol::xip();
    auto dxn = VectorSymbol::dxn();
    auto dxip = VectorSymbol::dxip();
    t.set(xip, xip, CoeffPoly(1));
    t.set(dxn, dxn, CoeffPoly(1));
    t.set(xip, dxn, CoeffPoly(0));
    t.set(xip, dxip, CoeffPoly::hp().scaled(GaussianRational(Rational(1, 2))));
    t.set(dxn, dxip, CoeffPoly(0));
    // Never used by any boundary trace; kept opaque so misuse is loud.
    t.set(dxip, dxip, CoeffPoly::opaque("dd"));
    return t;
}

}  // namespace kkw
