#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace ncfree {

using Rat = mpq_class;

// Gaussian rational: re + im*i with exact rational parts.  All series
// coefficients in this library are of this type; equality is exact.
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() : re(0), im(0) {}
    GaussRat(long r) : re(r), im(0) {}                // NOLINT(google-explicit-constructor)
    GaussRat(Rat r) : re(std::move(r)), im(0) {}      // NOLINT(google-explicit-constructor)
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

    GaussRat& operator+=(const GaussRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        Rat r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    GaussRat& operator*=(const Rat& s) {
        re *= s;
        im *= s;
        return *this;
    }
    GaussRat& operator/=(const Rat& s) {
        re /= s;
        im /= s;
        return *this;
    }
};

inline GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
inline GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
inline GaussRat operator-(const GaussRat& a) { return GaussRat(-a.re, -a.im); }
inline GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
inline GaussRat operator*(GaussRat a, const Rat& s) { return a *= s; }
inline GaussRat operator*(const Rat& s, GaussRat a) { return a *= s; }
inline GaussRat operator/(GaussRat a, const Rat& s) { return a /= s; }

inline bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
}
inline bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

inline const GaussRat& gauss_zero() {
    static const GaussRat z;
    return z;
}
inline GaussRat gauss_i() { return GaussRat(Rat(0), Rat(1)); }

// "p/q" (canonical GMP form, "3" when the denominator is 1).
std::string rat_to_string(const Rat& r);
// Parses what rat_to_string emits; throws domain_error on junk.
Rat rat_from_string(const std::string& s);

// "2/3", "2/3+1/2i", "-i", "0" -- used in human-readable output.
std::string gauss_to_string(const GaussRat& g);

std::ostream& operator<<(std::ostream& os, const GaussRat& g);

} // namespace ncfree
