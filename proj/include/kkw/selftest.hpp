/** Seeded oracle-equivalence suites behind the selftest command: symbolic
 * trace vs matrix trace, exact residues vs contour quadrature, moments vs
 * Monte-Carlo, partial-fraction reconstruction, and the composition
 * identity. A corrupt-pairing hook provides the negative control.
 */
#pragma once

#include <chrono>
#include <complex>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kkw/oracle.hpp"
#include "kkw/pipeline.hpp"

namespace kkw {

struct SelftestResult {
    bool passed = true;
    std::vector<std::string> lines;

    void record(const std::string& suite, bool ok, const std::string& detail = "") {
        passed = passed && ok;
        lines.push_back(std::string(ok ? "pass" : "FAIL") + "  " + suite +
                        (detail.empty() ? "" : "  (" + detail + ")"));
    }
};

inline SelftestResult run_selftest(uint64_t seed, bool corrupt_pairing = false) {
    SelftestResult out;
    std::mt19937_64 rng(seed);
    auto gauss_small = [&]() {
        std::uniform_int_distribution<long long> d(-3, 3);
        return GaussianRational(Rational(d(rng)), Rational(d(rng)));
    };

    // --- trace suite: symbolic Wick trace vs exact matrix trace ---
    {
        bool ok = true;
        std::string counterexample;
        for (int dim : {3, 4, 6}) {
            MatrixRep rep = build_rep(dim);
            std::uniform_int_distribution<size_t> half(1, 3);
            std::uniform_int_distribution<int> pick(0, 3);
            for (int trial = 0; trial < 200 && ok; ++trial) {
                size_t len = 2 * half(rng);
                std::vector<std::vector<GaussianRational>> vecs(
                    4, std::vector<GaussianRational>(rep.generators.size()));
                for (auto& v : vecs)
                    for (auto& x : v) x = gauss_small();
                PairingTable table;
                for (size_t a = 0; a < vecs.size(); ++a)
                    for (size_t b = a; b < vecs.size(); ++b) {
                        GaussianRational dot;
                        for (size_t c = 0; c < vecs[a].size(); ++c) dot += vecs[a][c] * vecs[b][c];
                        if (corrupt_pairing && a == b && a == 0)
                            dot += GaussianRational(1);  // negative-control corruption
                        table.set(VectorSymbol::aux(static_cast<int>(a)),
                                  VectorSymbol::aux(static_cast<int>(b)), CoeffPoly(dot));
                    }
                Word w;
                std::vector<std::vector<GaussianRational>> word_vecs;
                for (size_t p = 0; p < len; ++p) {
                    int a = pick(rng);
                    w.push_back(Factor::vector(VectorSymbol::aux(a)));
                    word_vecs.push_back(vecs[a]);
                }
                CoeffPoly sym = cliff_trace(CliffordExpr::word(w), dim, table);
                if (!(sym == CoeffPoly(matrix_trace_word(rep, word_vecs)))) {
                    ok = false;
                    counterexample =
                        "counterexample word " + word_to_string(w) + " in dim " + std::to_string(dim);
                }
            }
        }
        out.record("trace-oracle", ok, counterexample);
    }

    // --- contour suite: exact residues vs trapezoid quadrature ---
    {
        bool ok = true;
        std::uniform_int_distribution<int> ord(0, 7);
        std::uniform_int_distribution<long long> cnum(-9, 9), cden(1, 4);
        const std::map<std::string, std::complex<double>> pival{{"PI", {M_PI, 0.0}}};
        for (int trial = 0; trial < 100 && ok; ++trial) {
            int a = ord(rng), b = ord(rng);
            if (a + b == 0) a = 1;
            std::vector<GaussianRational> coeffs(a + b);
            for (auto& c : coeffs)
                c = {Rational(cnum(rng), cden(rng)), Rational(cnum(rng), cden(rng))};
            XiRational f = XiRational::scalar_term(coeffs, a, b);
            CliffordExpr integral = f.contour_gamma_plus();
            std::complex<double> exact = 0.0;
            for (auto& [w, c] : integral.terms()) exact += c.eval(pival);
            auto numeric =
                numeric_contour([&](std::complex<double> z) { return f.eval_scalar(z); });
            if (std::abs(numeric - exact) > 1e-9 * (1.0 + std::abs(exact))) ok = false;
        }
        out.record("contour-quadrature", ok);
    }

    // --- moments suite: exact sphere moments vs Monte-Carlo ---
    {
        bool ok = true;
        std::map<std::string, std::complex<double>> vals;
        for (int m = 1; m <= 4; ++m)
            vals["OMEGA" + std::to_string(m)] =
                2.0 * std::pow(M_PI, 0.5 * (m + 1)) / std::tgamma(0.5 * (m + 1));
        for (int m = 1; m <= 4 && ok; ++m) {
            for (auto shape : std::vector<std::vector<int>>{{2}, {4}, {2, 2}}) {
                if (static_cast<int>(shape.size()) > m + 1) continue;
                double exact = sphere_moment(shape, m).eval(vals).real();
                double mc = mc_sphere(shape, m, 200000, rng());
                if (std::abs(mc - exact) > 2e-2 * std::abs(exact)) ok = false;
            }
        }
        out.record("sphere-moments", ok);
    }

    // --- partial fractions: reconstruction identity ---
    {
        bool ok = true;
        std::uniform_int_distribution<int> ord(0, 5);
        std::uniform_int_distribution<long long> cnum(-9, 9), cden(1, 4);
        for (int trial = 0; trial < 60 && ok; ++trial) {
            int a = ord(rng), b = ord(rng);
            if (a + b == 0) a = 1;
            std::vector<GaussianRational> coeffs(a + b + 2);
            for (auto& c : coeffs)
                c = {Rational(cnum(rng), cden(rng)), Rational(cnum(rng), cden(rng))};
            XiRational f = XiRational::scalar_term(coeffs, a, b);
            if (!XiRational::reconstruct(f.partial_fractions()).equals(f)) ok = false;
        }
        out.record("partial-fractions", ok);
    }

    // --- composition identity ---
    {
        bool ok = true;
        try {
            PairingTable t = boundary_pairing_table();
            SymbolExpr p = dcube_symbol();
            SymbolExpr q = invert_symbol(p, get_symbol(OperatorId::DINV3, -3), 2, t);
            ok = compose_symbols(p, q, 0).equals_reduced(SymbolExpr::identity(), t) &&
                 compose_symbols(p, q, -1).equals_reduced(SymbolExpr{}, t) &&
                 compose_symbols(p, q, -2).equals_reduced(SymbolExpr{}, t);
        } catch (const std::exception&) {
            ok = false;
        }
        out.record("composition-identity", ok);
    }

    return out;
}

}  // namespace kkw
