#pragma once

#include <complex>
#include <string>

#include "polydiff/rational.hpp"

namespace polydiff {

// Exact complex rational a + b*i. All arithmetic is exact; division by a
// nonzero value is always possible (field).
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() = default;
    GaussRat(Rat r) : re(std::move(r)) {}            // NOLINT(google-explicit-constructor)
    GaussRat(long r) : re(r) {}                      // NOLINT(google-explicit-constructor)
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    GaussRat conj() const { return GaussRat(re, -im); }

    // |z|^2 as an exact rational.
    Rat norm2() const { return re * re + im * im; }

    GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
    GaussRat& operator*=(const GaussRat& o) {
        Rat r = re * o.re - im * o.im;
        Rat i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o) {
        Rat n2 = o.norm2();
        if (n2 == 0) throw std::domain_error("GaussRat: division by zero");
        Rat r = (re * o.re + im * o.im) / n2;
        Rat i = (im * o.re - re * o.im) / n2;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    friend GaussRat operator-(const GaussRat& a) { return GaussRat(-a.re, -a.im); }
    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

inline std::complex<double> to_complex(const GaussRat& z) {
    return {to_double(z.re), to_double(z.im)};
}

inline std::string to_string(const GaussRat& z) {
    if (z.is_real()) return to_string(z.re);
    std::string s = "(" + to_string(z.re);
    s += (z.im < 0) ? "-" : "+";
    Rat a = z.im < 0 ? Rat(-z.im) : z.im;
    s += to_string(a) + "*i)";
    return s;
}

}  // namespace polydiff
