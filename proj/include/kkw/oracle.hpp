/** Independent numeric ground truth for the symbolic layers: explicit matrix
 * Clifford representations with exact entries, trapezoidal contour
 * quadrature, and Monte-Carlo sphere integration.
 */
#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "kkw/gaussian.hpp"
#include "kkw/trace.hpp"

namespace kkw {

using GMatrix = std::vector<std::vector<GaussianRational>>;

inline GMatrix gmat_identity(size_t n) {
    GMatrix m(n, std::vector<GaussianRational>(n));
    for (size_t i = 0; i < n; ++i) m[i][i] = GaussianRational(1);
    return m;
}

inline GMatrix gmat_mul(const GMatrix& a, const GMatrix& b) {
    size_t n = a.size();
    GMatrix r(n, std::vector<GaussianRational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

inline GMatrix gmat_add(const GMatrix& a, const GMatrix& b) {
    GMatrix r = a;
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = 0; j < r.size(); ++j) r[i][j] += b[i][j];
    return r;
}

inline GMatrix gmat_scale(const GMatrix& a, const GaussianRational& s) {
    GMatrix r = a;
    for (auto& row : r)
        for (auto& x : row) x *= s;
    return r;
}

inline GaussianRational gmat_trace(const GMatrix& a) {
    GaussianRational t;
    for (size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

inline GMatrix gmat_kron(const GMatrix& a, const GMatrix& b) {
    size_t n = a.size(), m = b.size();
    GMatrix r(n * m, std::vector<GaussianRational>(n * m));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (a[i][j].is_zero()) continue;
            for (size_t k = 0; k < m; ++k)
                for (size_t l = 0; l < m; ++l) r[i * m + k][j * m + l] = a[i][j] * b[k][l];
        }
    return r;
}

/// Generators e_a with e_a e_b + e_b e_a = -2 delta_ab, entries in {0,+-1,+-i}.
struct MatrixRep {
    int dim = 0;  // ambient dimension (number of generators)
    std::vector<GMatrix> generators;
    size_t size() const { return generators.empty() ? 0 : generators[0].size(); }
};

inline MatrixRep build_rep(int dim) {
    const GaussianRational I = GaussianRational::i();
    GMatrix s0 = {{GaussianRational(1), GaussianRational(0)},
                  {GaussianRational(0), GaussianRational(1)}};
    GMatrix s1 = {{GaussianRational(0), GaussianRational(1)},
                  {GaussianRational(1), GaussianRational(0)}};
    GMatrix s2 = {{GaussianRational(0), -I}, {I, GaussianRational(0)}};
    GMatrix s3 = {{GaussianRational(1), GaussianRational(0)},
                  {GaussianRational(0), GaussianRational(-1)}};

    MatrixRep rep;
    rep.dim = dim;
    switch (dim) {
        case 3:
            rep.generators = {gmat_scale(s1, I), gmat_scale(s2, I), gmat_scale(s3, I)};
            break;
        case 4:
            rep.generators = {gmat_scale(gmat_kron(s1, s1), I), gmat_scale(gmat_kron(s2, s1), I),
                              gmat_scale(gmat_kron(s3, s1), I), gmat_scale(gmat_kron(s0, s2), I)};
            break;
        case 6:
            rep.generators = {gmat_scale(gmat_kron(gmat_kron(s1, s1), s1), I),
                              gmat_scale(gmat_kron(gmat_kron(s2, s1), s1), I),
                              gmat_scale(gmat_kron(gmat_kron(s3, s1), s1), I),
                              gmat_scale(gmat_kron(gmat_kron(s0, s2), s1), I),
                              gmat_scale(gmat_kron(gmat_kron(s0, s3), s1), I),
                              gmat_scale(gmat_kron(gmat_kron(s0, s0), s2), I)};
            break;
        default:
            throw UnsupportedDimension("build_rep: dim must be 3, 4 or 6");
    }

    // Relations are cheap to verify; refuse to hand out a broken oracle.
    size_t n = rep.size();
    for (size_t a = 0; a < rep.generators.size(); ++a)
        for (size_t b = a; b < rep.generators.size(); ++b) {
            GMatrix anti = gmat_add(gmat_mul(rep.generators[a], rep.generators[b]),
                                    gmat_mul(rep.generators[b], rep.generators[a]));
            GMatrix expect = gmat_scale(gmat_identity(n), GaussianRational(a == b ? -2 : 0));
            if (anti != expect) throw std::logic_error("build_rep: relations violated");
        }
    return rep;
}

/// Maps each coefficient vector to sum_a v[a] e_a and traces the product.
inline GaussianRational matrix_trace_word(const MatrixRep& rep,
                                          const std::vector<std::vector<GaussianRational>>& vectors) {
    size_t n = rep.size();
    GMatrix acc = gmat_identity(n);
    for (const auto& v : vectors) {
        if (v.size() != rep.generators.size())
            throw std::invalid_argument("matrix_trace_word: bad vector length");
        GMatrix m(n, std::vector<GaussianRational>(n));
        for (size_t a = 0; a < v.size(); ++a)
            if (!v[a].is_zero()) m = gmat_add(m, gmat_scale(rep.generators[a], v[a]));
        acc = gmat_mul(acc, m);
    }
    return gmat_trace(acc);
}

struct PoleOnContour : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Trapezoidal approximation of the closed contour integral of f around
/// `center` with the given radius. `pole_guard` lists pole locations; a
/// sample point within 1e-6 of one raises PoleOnContour.
template <typename F>
std::complex<double> numeric_contour(F&& f, std::complex<double> center = {0.0, 1.0},
                                     double radius = 1.0, int samples = 4096,
                                     const std::vector<std::complex<double>>& pole_guard = {}) {
    std::complex<double> sum = 0.0;
    for (int k = 0; k < samples; ++k) {
        double theta = 2.0 * M_PI * k / samples;
        std::complex<double> dir(std::cos(theta), std::sin(theta));
        std::complex<double> z = center + radius * dir;
        for (auto& p : pole_guard)
            if (std::abs(z - p) < 1e-6)
                throw PoleOnContour("numeric_contour: sample point touches a pole");
        // dz = i * radius * e^{i theta} dtheta
        sum += f(z) * (std::complex<double>(0.0, 1.0) * radius * dir);
    }
    return sum * (2.0 * M_PI / samples);
}

/// Monte-Carlo estimate of the moment of xi^alpha over the unit sphere S^m
/// (in R^{m+1}) via normalized Gaussian sampling; includes the full sphere
/// measure (total mass = Vol(S^m)).
inline double mc_sphere(const std::vector<int>& alpha, int m, long long samples, uint64_t seed) {
    if (samples < 100000) throw std::invalid_argument("mc_sphere: too few samples");
    int ncoords = m + 1;
    if (static_cast<int>(alpha.size()) > ncoords)
        throw std::invalid_argument("mc_sphere: alpha longer than coordinate count");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double total = 0.0;
    std::vector<double> x(ncoords);
    for (long long s = 0; s < samples; ++s) {
        double norm2 = 0.0;
        for (int c = 0; c < ncoords; ++c) {
            x[c] = gauss(rng);
            norm2 += x[c] * x[c];
        }
        double inv = 1.0 / std::sqrt(norm2);
        double value = 1.0;
        for (size_t c = 0; c < alpha.size(); ++c)
            for (int e = 0; e < alpha[c]; ++e) value *= x[c] * inv;
        total += value;
    }
    double surface = 2.0 * std::pow(M_PI, 0.5 * ncoords) / std::tgamma(0.5 * ncoords);
    return surface * total / static_cast<double>(samples);
}

}  // namespace kkw
