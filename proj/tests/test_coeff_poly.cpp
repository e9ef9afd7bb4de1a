#include "doctest.h"

#include <complex>
#include <random>

#include "kkw/coeff_poly.hpp"

using namespace kkw;

namespace {

std::mt19937_64 rng(20240817);

Rational random_rational() {
    std::uniform_int_distribution<long long> num(-40, 40);
    std::uniform_int_distribution<long long> den(1, 12);
    return Rational(num(rng), den(rng));
}

GaussianRational random_gauss() { return {random_rational(), random_rational()}; }

CoeffPoly random_poly() {
    std::uniform_int_distribution<int> nterms(0, 4);
    std::uniform_int_distribution<int> nsyms(0, 3);
    std::uniform_int_distribution<int> pick(0, 6);
    std::uniform_int_distribution<int> expd(1, 3);
    CoeffPoly p;
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        CoeffPoly term(random_gauss());
        int syms = nsyms(rng);
        for (int s = 0; s < syms; ++s) {
            ScalarSymbol sym;
            switch (pick(rng)) {
                case 0: sym = ScalarSymbol::hp(); break;
                case 1: sym = ScalarSymbol::pi(); break;
                case 2: sym = ScalarSymbol::omega(2); break;
                case 3: sym = ScalarSymbol::omega(4); break;
                case 4: sym = ScalarSymbol::t(); break;
                case 5: sym = ScalarSymbol::n(); break;
                default: sym = ScalarSymbol::c0(); break;
            }
            term *= CoeffPoly::symbol(sym, expd(rng));
        }
        p += term;
    }
    return p;
}

}  // namespace

TEST_CASE("bigint basics") {
    BigInt a = BigInt::from_string("123456789012345678901234567890");
    BigInt b = BigInt::from_string("987654321098765432109876543210");
    CHECK((a * b).to_string() == "121932631137021795226185032733622923332237463801111263526900");
    CHECK((b / a).to_string() == "8");
    CHECK((b % a).to_string() == "9000000000900000000090");
    CHECK(BigInt::gcd(a, b).to_string() == "9000000000900000000090");
    CHECK((a - a).is_zero());
    CHECK((BigInt(-7) % BigInt(3)) == BigInt(-1));
    CHECK((BigInt(-7) / BigInt(3)) == BigInt(-2));
}

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4).to_string() == "1/2");
    CHECK(Rational(-2, -4).to_string() == "1/2");
    CHECK(Rational(2, -4).to_string() == "-1/2");
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK(Rational(0, 5).to_string() == "0");
}

TEST_CASE("gaussian rational field ops") {
    GaussianRational one_plus_i(Rational(1), Rational(1));
    GaussianRational one_minus_i(Rational(1), Rational(-1));
    CHECK((one_plus_i * one_minus_i) == GaussianRational(2));
    CHECK((GaussianRational(1) / one_plus_i) == GaussianRational(Rational(1, 2), Rational(-1, 2)));
    CHECK(GaussianRational::i_pow(7) == -GaussianRational::i());
    CHECK(GaussianRational::make(-5, 64, 0, 1).to_string() == "-5/64");
}

TEST_CASE("poly_add examples") {
    // additive cancellation on the HP monomial
    CoeffPoly a = CoeffPoly::hp().scaled(GaussianRational(Rational(2), Rational(1)));
    CoeffPoly b = CoeffPoly::hp().scaled(GaussianRational(-2));
    CHECK((a + b) == CoeffPoly::hp().scaled(GaussianRational::i()));
    CHECK((CoeffPoly() + CoeffPoly()).is_zero());

    CoeffPoly mono = CoeffPoly::pi(2) * CoeffPoly::omega(3) * CoeffPoly::hp() * CoeffPoly::t_sym();
    CoeffPoly u = mono.scaled(GaussianRational(Rational(-592, 3), Rational(0)));
    CoeffPoly v = mono.scaled(GaussianRational(Rational(0), Rational(5, 6)));
    CHECK((u + v) == mono.scaled(GaussianRational(Rational(-592, 3), Rational(5, 6))));
}

TEST_CASE("poly_mul examples") {
    CHECK((CoeffPoly::pi() * CoeffPoly::omega(3)).to_string() == "(1)*PI*OMEGA3");
    CoeffPoly ab(GaussianRational(Rational(3, 7), Rational(-2, 5)));
    CHECK((ab * CoeffPoly(1)) == ab);
    CoeffPoly x = CoeffPoly::hp().scaled(GaussianRational(Rational(1), Rational(1)));
    CoeffPoly y = CoeffPoly::hp().scaled(GaussianRational(Rational(1), Rational(-1)));
    CHECK((x * y) == CoeffPoly::symbol(ScalarSymbol::hp(), 2).scaled(GaussianRational(2)));
}

TEST_CASE("canonical string examples") {
    CHECK(CoeffPoly().to_string() == "0");
    CHECK(CoeffPoly(GaussianRational(Rational(0), Rational(-5, 64))).to_string() == "(-5/64i)");
    CoeffPoly p = (CoeffPoly::hp() * CoeffPoly::pi() * CoeffPoly::omega(3) * CoeffPoly::t_sym())
                      .scaled(GaussianRational(Rational(-592, 3), Rational(0)));
    CHECK(p.to_string() == "(-592/3)*HP*PI*OMEGA3*T");
}

TEST_CASE("symbol order is HP < PI < OMEGA < T < N < C0 < OPAQUE") {
    CoeffPoly p = CoeffPoly::opaque("zz") * CoeffPoly::c0() * CoeffPoly::n_sym() *
                  CoeffPoly::t_sym() * CoeffPoly::omega(2) * CoeffPoly::pi() * CoeffPoly::hp();
    CHECK(p.to_string() == "(1)*HP*PI*OMEGA2*T*N*C0*OPAQUE(zz)");
    CHECK(CoeffPoly::omega(2).to_string() < CoeffPoly::omega(3).to_string());
}

TEST_CASE("ring axioms on randomized inputs") {
    for (int trial = 0; trial < 200; ++trial) {
        CoeffPoly a = random_poly(), b = random_poly(), c = random_poly();
        CHECK((a + b) == (b + a));
        CHECK(((a + b) + c) == (a + (b + c)));
        CHECK((a * b) == (b * a));
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a * (b + c)) == (a * b + a * c));
        CHECK((a + CoeffPoly()) == a);
        CHECK((a * CoeffPoly(1)) == a);
        CHECK((a * CoeffPoly()).is_zero());
    }
}

TEST_CASE("canonical string round-trips") {
    for (int trial = 0; trial < 200; ++trial) {
        CoeffPoly a = random_poly();
        CHECK(CoeffPoly::parse(a.to_string()) == a);
    }
    CoeffPoly odd = CoeffPoly::opaque("trace:A(Y)") +
                    CoeffPoly(GaussianRational(Rational(1, 3), Rational(-7, 2)));
    CHECK(CoeffPoly::parse(odd.to_string()) == odd);
}

TEST_CASE("exact arithmetic agrees with complex doubles") {
    std::map<std::string, std::complex<double>> vals;
    for (int trial = 0; trial < 200; ++trial) {
        GaussianRational a = random_gauss(), b = random_gauss();
        auto lhs = (a * b + a).to_complex();
        auto rhs = a.to_complex() * b.to_complex() + a.to_complex();
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
    }
    CoeffPoly p = random_poly(), q = random_poly();
    vals["HP"] = {0.37, 0.0};
    vals["PI"] = {3.141592653589793, 0.0};
    vals["OMEGA2"] = {12.566370614359172, 0.0};
    vals["OMEGA4"] = {26.318945069571622, 0.0};
    vals["T"] = {1.25, -0.5};
    vals["N"] = {-0.75, 0.25};
    vals["C0"] = {0.11, 0.93};
    auto lhs = (p * q).eval(vals);
    auto rhs = p.eval(vals) * q.eval(vals);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * (1.0 + std::abs(rhs)));
}
