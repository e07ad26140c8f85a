#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace bvkit {

using Rat = boost::multiprecision::cpp_rational;

/// Gaussian rational a + b*i. The kernel is exact: no floating point anywhere.
struct Scalar {
    Rat re;
    Rat im;

    Scalar() = default;
    Scalar(int v) : re(v) {}
    Scalar(Rat r) : re(std::move(r)) {}
    Scalar(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static Scalar i_unit() { return Scalar(Rat(0), Rat(1)); }
    static Scalar of(long num, long den = 1) { return Scalar(Rat(num, den)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Scalar operator-() const { return {-re, -im}; }
    Scalar &operator+=(const Scalar &o) { re += o.re; im += o.im; return *this; }
    Scalar &operator-=(const Scalar &o) { re -= o.re; im -= o.im; return *this; }

    friend Scalar operator+(Scalar a, const Scalar &b) { a += b; return a; }
    friend Scalar operator-(Scalar a, const Scalar &b) { a -= b; return a; }
    friend Scalar operator*(const Scalar &a, const Scalar &b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Scalar operator/(const Scalar &a, const Scalar &b) {
        Rat n = b.re * b.re + b.im * b.im;
        if (n == 0) throw std::domain_error("division by zero scalar");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    friend bool operator==(const Scalar &a, const Scalar &b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Scalar &a, const Scalar &b) { return !(a == b); }
};

std::string rat_to_string(const Rat &r);
/// Always emits the "p/q" form used by the JSON schema ("0/1", "-3/2", ...).
std::string rat_to_fraction_string(const Rat &r);
Rat rat_from_string(const std::string &s);

/// Text form used by the printer/parser: "3", "-3/2", "i", "2*i", "(1/2+3/4*i)".
std::string scalar_to_string(const Scalar &s);

} // namespace bvkit
