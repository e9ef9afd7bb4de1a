/** Gaussian rationals re + im*i with exact field arithmetic. */
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include "kkw/rational.hpp"

namespace kkw {

class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long long re) : re_(re) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }
    static GaussianRational make(long long re_n, long long re_d, long long im_n, long long im_d) {
        return GaussianRational(Rational(re_n, re_d), Rational(im_n, im_d));
    }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.re_ * b.re_ + b.im_ * b.im_;
        if (n.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        return {(a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n};
    }
    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational conj() const { return {re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o) { *this = *this + o; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { *this = *this - o; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) { *this = *this * o; return *this; }
    GaussianRational& operator/=(const GaussianRational& o) { *this = *this / o; return *this; }

    bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }
    // lexicographic; used only for canonical container ordering
    bool operator<(const GaussianRational& o) const {
        if (re_ != o.re_) return re_ < o.re_;
        return im_ < o.im_;
    }

    // i^k for k >= 0
    static GaussianRational i_pow(long long k) {
        switch (((k % 4) + 4) % 4) {
            case 0: return GaussianRational(1);
            case 1: return i();
            case 2: return GaussianRational(-1);
            default: return -i();
        }
    }

    GaussianRational pow(long long k) const {
        if (k < 0) return GaussianRational(1) / pow(-k);
        GaussianRational r(1), base = *this;
        while (k) {
            if (k & 1) r *= base;
            base *= base;
            k >>= 1;
        }
        return r;
    }

    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

    /// Canonical rendering: "re", "imi", or "re+imi" / "re-imi" (no spaces).
    std::string to_string() const {
        if (is_zero()) return "0";
        if (im_.is_zero()) return re_.to_string();
        std::string istr = im_.to_string() + "i";
        if (re_.is_zero()) return istr;
        return re_.to_string() + (im_.is_negative() ? "" : "+") + istr;
    }

private:
    Rational re_, im_;
};

}  // namespace kkw
