#include "doctest.h"

#include <random>

#include "kkw/oracle.hpp"
#include "kkw/pairing.hpp"
#include "kkw/trace.hpp"

using namespace kkw;

namespace {

std::mt19937_64 rng(911);

GaussianRational small_gauss() {
    std::uniform_int_distribution<long long> d(-3, 3);
    return {Rational(d(rng)), Rational(d(rng))};
}

Word aux_word(int nvecs, size_t len) {
    std::uniform_int_distribution<int> pick(0, nvecs - 1);
    Word w;
    for (size_t i = 0; i < len; ++i) w.push_back(Factor::vector(VectorSymbol::aux(pick(rng))));
    return w;
}

/// Pairing table over AUX(a) symbols with <a,b> = sum_c V_a[c] V_b[c].
PairingTable numeric_table(const std::vector<std::vector<GaussianRational>>& vecs) {
    PairingTable t;
    for (size_t a = 0; a < vecs.size(); ++a)
        for (size_t b = a; b < vecs.size(); ++b) {
            GaussianRational dot;
            for (size_t c = 0; c < vecs[a].size(); ++c) dot += vecs[a][c] * vecs[b][c];
            t.set(VectorSymbol::aux(static_cast<int>(a)), VectorSymbol::aux(static_cast<int>(b)),
                  CoeffPoly(dot));
        }
    return t;
}

}  // namespace

TEST_CASE("cliff_mul concatenates words bilinearly") {
    auto xip = CliffordExpr::vector(VectorSymbol::xip());
    auto id = CliffordExpr::identity();
    CHECK((id * xip) == xip);

    auto lhs = CliffordExpr::vector(VectorSymbol::dxn(),
                                    CoeffPoly::hp().scaled(GaussianRational(2))) *
               xip;
    CliffordExpr expect = CliffordExpr::word(
        {Factor::vector(VectorSymbol::dxn()), Factor::vector(VectorSymbol::xip())},
        CoeffPoly::hp().scaled(GaussianRational(2)));
    CHECK(lhs == expect);
}

TEST_CASE("trace identities under the boundary pairing table") {
    PairingTable t = boundary_pairing_table();
    auto X = Factor::vector(VectorSymbol::xip());
    auto D = Factor::vector(VectorSymbol::dxn());
    auto P = Factor::vector(VectorSymbol::dxip());

    // tr[c(xi')c(xi')] = -tr(id) in every dimension.
    CHECK(cliff_trace(CliffordExpr::word({X, X}), 3, t) == CoeffPoly(-2));
    CHECK(cliff_trace(CliffordExpr::word({X, X}), 4, t) == CoeffPoly(-4));
    CHECK(cliff_trace(CliffordExpr::word({X, X}), 6, t) == CoeffPoly(-8));

    // tr[c(xi')c(dx_n)] = 0.
    CHECK(cliff_trace(CliffordExpr::word({X, D}), 4, t).is_zero());

    // tr[c(dx_n)c(xi')c(dx_n) d_{x_n}c(xi')] = -2 h'(0)  (dim 4).
    CHECK(cliff_trace(CliffordExpr::word({D, X, D, P}), 4, t) ==
          CoeffPoly::hp().scaled(GaussianRational(-2)));

    // tr[c(xi')c(xi')c(dx_n) d_{x_n}c(xi')] = 0.
    CHECK(cliff_trace(CliffordExpr::word({X, X, D, P}), 4, t).is_zero());
}

TEST_CASE("odd-length vector words trace to zero") {
    PairingTable t = boundary_pairing_table();
    std::uniform_int_distribution<int> pick(0, 1);
    for (size_t len : {1u, 3u, 5u}) {
        for (int trial = 0; trial < 25; ++trial) {
            Word w;
            for (size_t i = 0; i < len; ++i)
                w.push_back(Factor::vector(pick(rng) ? VectorSymbol::xip() : VectorSymbol::dxn()));
            CHECK(cliff_trace(CliffordExpr::word(w, CoeffPoly(small_gauss())), 4, t).is_zero());
        }
    }
}

TEST_CASE("cyclic invariance of the trace") {
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<std::vector<GaussianRational>> vecs(4, std::vector<GaussianRational>(4));
        for (auto& v : vecs)
            for (auto& x : v) x = small_gauss();
        PairingTable t = numeric_table(vecs);
        std::uniform_int_distribution<size_t> len(2, 6);
        Word w = aux_word(4, len(rng));
        CoeffPoly base = cliff_trace(CliffordExpr::word(w), 4, t);
        for (size_t r = 1; r < w.size(); ++r) {
            Word rot(w.begin() + r, w.end());
            rot.insert(rot.end(), w.begin(), w.begin() + r);
            CHECK(cliff_trace(CliffordExpr::word(rot), 4, t) == base);
        }
    }
}

TEST_CASE("matrix representations satisfy the relations") {
    for (int dim : {3, 4, 6}) {
        MatrixRep rep = build_rep(dim);  // relations checked on construction
        CHECK(rep.size() == static_cast<size_t>(trace_id_value(dim)));
        CHECK(rep.generators.size() == static_cast<size_t>(dim));
        for (auto& g : rep.generators) CHECK(gmat_trace(g).is_zero());
    }
}

TEST_CASE("symbolic trace equals exact matrix trace") {
    // Even lengths for dim 3: the 2x2 representation has a chirality element
    // (e1 e2 e3 = id up to phase) so odd products are not traceless there,
    // while the symbolic functional implements the even calculus throughout.
    for (int dim : {3, 4, 6}) {
        MatrixRep rep = build_rep(dim);
        std::uniform_int_distribution<size_t> half(1, 3);
        for (int trial = 0; trial < 200; ++trial) {
            size_t len = 2 * half(rng);
            if (dim != 3 && trial % 5 == 0) len = 2 * half(rng) - 1;  // odd spot checks
            std::vector<std::vector<GaussianRational>> vecs(
                4, std::vector<GaussianRational>(rep.generators.size()));
            for (auto& v : vecs)
                for (auto& x : v) x = small_gauss();
            PairingTable t = numeric_table(vecs);
            Word w = aux_word(4, len);
            std::vector<std::vector<GaussianRational>> word_vecs;
            for (auto& f : w) word_vecs.push_back(vecs[f.vec.index]);
            CoeffPoly sym = cliff_trace(CliffordExpr::word(w), dim, t);
            GaussianRational mat = matrix_trace_word(rep, word_vecs);
            CHECK(sym == CoeffPoly(mat));
        }
    }
    // The dim-3 chirality element itself, documenting the even-only oracle.
    MatrixRep rep3 = build_rep(3);
    GMatrix prod = gmat_mul(gmat_mul(rep3.generators[0], rep3.generators[1]), rep3.generators[2]);
    CHECK(gmat_trace(prod) == GaussianRational(2));
}

TEST_CASE("single generators are traceless in the matrix oracle") {
    MatrixRep rep = build_rep(4);
    std::vector<GaussianRational> unit(4);
    unit[2] = GaussianRational(1);
    CHECK(matrix_trace_word(rep, {unit}).is_zero());
    CHECK(matrix_trace_word(rep, {unit, unit}) == GaussianRational(-4));
}

TEST_CASE("normal ordering agrees with the trace") {
    PairingTable t = boundary_pairing_table();
    auto X = Factor::vector(VectorSymbol::xip());
    // c(xi')c(xi') normal-orders to -1.
    CliffordExpr sq = normal_ordered(CliffordExpr::word({X, X}), t);
    CHECK(sq == CliffordExpr::identity(CoeffPoly(-1)));
    // normal ordering preserves the trace
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> pick(0, 2);
        std::uniform_int_distribution<size_t> len(2, 6);
        Word w;
        for (size_t i = 0, n = len(rng); i < n; ++i) {
            int p = pick(rng);
            VectorSymbol v = p == 0   ? VectorSymbol::xip()
                             : p == 1 ? VectorSymbol::dxn()
                                      : VectorSymbol::dxip();
            w.push_back(Factor::vector(v));
        }
        CliffordExpr e = CliffordExpr::word(w, CoeffPoly(small_gauss()));
        CHECK(cliff_trace(normal_ordered(e, t), 4, t) == cliff_trace(e, 4, t));
    }
}

TEST_CASE("opaque trace rule: registered, unknown and empty-table paths") {
    PairingTable t = boundary_pairing_table();
    OpaqueTraceRegistry reg = default_opaque_registry();
    std::vector<std::string> flags;

    // c(xi') p0 c(xi') c(dx_n) reduces to the registered p0|DXN shape:
    // the xi' pair contracts away, leaving +tr[p0 c(dx_n)] = -2i C0.
    Word sandwich = {Factor::vector(VectorSymbol::xip()), Factor::make_opaque("p0"),
                     Factor::vector(VectorSymbol::xip()), Factor::vector(VectorSymbol::dxn())};
    CoeffPoly got = opaque_trace_rule(CliffordExpr::word(sandwich), 4, t, reg, &flags);
    CHECK(flags.empty());
    CHECK(got == CoeffPoly::c0().scaled(GaussianRational(Rational(0), Rational(-2))));

    // Unregistered opaque factor comes back flagged, never silently zero.
    CoeffPoly unknown = opaque_trace_rule(CliffordExpr::opaque("A(Y)"), 4, t, reg, &flags);
    CHECK(unknown == CoeffPoly::opaque("trace:A(Y)"));
    CHECK(flags.size() == 1);

    OpaqueTraceRegistry empty;
    flags.clear();
    CoeffPoly fallback = opaque_trace_rule(CliffordExpr::word(sandwich), 4, t, empty, &flags);
    CHECK(!fallback.is_zero());
    CHECK(fallback.contains(ScalarSymbol::Kind::OPAQUE));
    CHECK(!flags.empty());

    // cliff_trace refuses opaque words outright.
    CHECK_THROWS_AS(cliff_trace(CliffordExpr::opaque("p0"), 4, t), OpaqueTraceError);
}

TEST_CASE("mixed vector/opaque word routes through the vector tail") {
    PairingTable t = boundary_pairing_table();
    OpaqueTraceRegistry reg = default_opaque_registry();
    std::vector<std::string> flags;
    // p0 c(dx_n) c(xi') c(xi') -> tail normal-orders to -DXN, so the value is
    // -tr[p0 c(dx_n)] = +2i C0.
    Word w = {Factor::make_opaque("p0"), Factor::vector(VectorSymbol::dxn()),
              Factor::vector(VectorSymbol::xip()), Factor::vector(VectorSymbol::xip())};
    CoeffPoly got = opaque_trace_rule(CliffordExpr::word(w), 4, t, reg, &flags);
    CHECK(got == CoeffPoly::c0().scaled(GaussianRational(Rational(0), Rational(2))));
    CHECK(flags.empty());
}
