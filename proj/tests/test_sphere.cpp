#include "doctest.h"

#include <cmath>
#include <functional>
#include <vector>

#include "kkw/oracle.hpp"
#include "kkw/sphere.hpp"

using namespace kkw;

namespace {

double omega_value(int m) {
    return 2.0 * std::pow(M_PI, 0.5 * (m + 1)) / std::tgamma(0.5 * (m + 1));
}

// all exponent vectors over `slots` coordinates with |alpha| <= max_total
void enumerate_alphas(int slots, int max_total,
                      const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> alpha(slots, 0);
    std::function<void(int, int)> rec = [&](int slot, int remaining) {
        if (slot == slots) {
            fn(alpha);
            return;
        }
        for (int a = 0; a <= remaining; ++a) {
            alpha[slot] = a;
            rec(slot + 1, remaining - a);
        }
        alpha[slot] = 0;
    };
    rec(0, max_total);
}

}  // namespace

TEST_CASE("named moments") {
    CHECK(sphere_moment({1, 0, 0}, 2).is_zero());
    CHECK(sphere_moment({2, 0, 0}, 2) ==
          CoeffPoly::omega(2).scaled(GaussianRational(Rational(1, 3))));
    CHECK(sphere_moment({2, 2, 0, 0, 0}, 4) ==
          CoeffPoly::omega(4).scaled(GaussianRational(Rational(1, 35))));
    CHECK(sphere_moment({4}, 2) == CoeffPoly::omega(2).scaled(GaussianRational(Rational(1, 5))));
    CHECK(sphere_moment({}, 3) == CoeffPoly::omega(3));
    CHECK_THROWS_AS(sphere_moment({4, 2}, 3), UnsupportedDegree);
}

TEST_CASE("odd moments vanish for all |alpha| <= 5, m <= 4") {
    for (int m = 1; m <= 4; ++m) {
        enumerate_alphas(m + 1, 5, [&](const std::vector<int>& alpha) {
            int total = 0;
            bool odd_slot = false;
            for (int a : alpha) {
                total += a;
                odd_slot = odd_slot || (a % 2 == 1);
            }
            if (total % 2 == 1 || (odd_slot && total <= 4)) {
                CHECK(sphere_moment(alpha, m).is_zero());
            }
        });
    }
}

TEST_CASE("quadratic moments sum to the sphere volume") {
    for (int m = 1; m <= 4; ++m) {
        CoeffPoly sum;
        for (int j = 0; j <= m; ++j) {
            std::vector<int> alpha(m + 1, 0);
            alpha[j] = 2;
            sum += sphere_moment(alpha, m);
        }
        CHECK(sum == CoeffPoly::omega(m));
    }
}

TEST_CASE("pattern contraction") {
    CHECK(contract_pattern(TangentialPattern::xy(), 2) ==
          (CoeffPoly::omega(2) * CoeffPoly::t_sym()).scaled(GaussianRational(Rational(1, 3))));
    CHECK(contract_pattern(TangentialPattern::xn(), 2).is_zero());
    CHECK(contract_pattern(TangentialPattern::nx(), 4).is_zero());
    CHECK(contract_pattern(TangentialPattern::nn(), 3) ==
          CoeffPoly::omega(3) * CoeffPoly::n_sym());
    CHECK(contract_pattern(TangentialPattern::odd_opaque("A(Y) xi_j"), 2).is_zero());
    CHECK(contract_pattern(TangentialPattern::pure({2}), 2) == sphere_moment({2}, 2));
}

TEST_CASE("pattern merge") {
    auto xy = TangentialPattern::xy();
    CHECK(TangentialPattern::merge(TangentialPattern::one(), xy) == xy);
    CHECK(TangentialPattern::merge(xy, TangentialPattern::one()) == xy);
    auto p = TangentialPattern::merge(TangentialPattern::pure({1, 1}),
                                      TangentialPattern::pure({1, 1, 2}));
    CHECK(p == TangentialPattern::pure({2, 2, 2}));
    CHECK_THROWS(TangentialPattern::merge(xy, TangentialPattern::nn()));
}

TEST_CASE("Monte-Carlo agreement for supported even moments") {
    // canonical shapes (2), (4), (2,2) per sphere dimension; 1e6 samples
    std::map<std::string, std::complex<double>> vals;
    for (int m = 1; m <= 4; ++m) vals["OMEGA" + std::to_string(m)] = omega_value(m);
    std::vector<std::vector<int>> shapes = {{2}, {4}, {2, 2}};
    uint64_t seed = 12345;
    for (int m = 1; m <= 4; ++m) {
        for (auto& shape : shapes) {
            if (static_cast<int>(shape.size()) > m + 1) continue;
            double exact = sphere_moment(shape, m).eval(vals).real();
            double mc = mc_sphere(shape, m, 1000000, seed++);
            CHECK(std::abs(mc - exact) <= 1e-2 * std::abs(exact));
        }
    }
    // odd moment estimate hovers near zero
    double mc_odd = mc_sphere({1, 0, 0}, 2, 1000000, 999);
    CHECK(std::abs(mc_odd) < 0.05);
    CHECK_THROWS(mc_sphere({2}, 2, 10, 1));
}
