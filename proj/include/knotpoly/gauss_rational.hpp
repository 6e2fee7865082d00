#ifndef KNOTPOLY_GAUSS_RATIONAL_HPP
#define KNOTPOLY_GAUSS_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace knotpoly {

/*
 * A Gaussian rational a + b*zeta with zeta^2 = -1 and a, b exact rationals
 * (GMP-backed, stored in lowest terms with positive denominator — mpq_class
 * canonicalizes on construction and after every arithmetic operation).
 *
 * The imaginary unit shows up in two places: the sl3 R-matrix entries and the
 * phase maps of the weak-conjugacy data. Everything else is real, so most
 * values have im == 0; the arithmetic below short-circuits nothing and stays
 * exact regardless.
 */
struct GaussRational {
    mpq_class re;
    mpq_class im;

    GaussRational() : re(0), im(0) {}
    GaussRational(long n) : re(n), im(0) {}
    GaussRational(long r, long i) : re(r), im(i) {}
    GaussRational(const mpq_class& r) : re(r), im(0) { re.canonicalize(); }
    GaussRational(const mpq_class& r, const mpq_class& i) : re(r), im(i) {
        re.canonicalize();
        im.canonicalize();
    }

    static GaussRational zeta() { return GaussRational(mpq_class(0), mpq_class(1)); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_one() const { return re == 1 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    // True when the value lies in Z (used by the integrality assertions).
    bool is_integer() const { return sgn(im) == 0 && re.get_den() == 1; }

    GaussRational operator-() const { return GaussRational(-re, -im); }
    GaussRational operator+(const GaussRational& o) const { return GaussRational(re + o.re, im + o.im); }
    GaussRational operator-(const GaussRational& o) const { return GaussRational(re - o.re, im - o.im); }
    GaussRational operator*(const GaussRational& o) const {
        return GaussRational(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    GaussRational operator/(const GaussRational& o) const;
    GaussRational& operator+=(const GaussRational& o) { re += o.re; im += o.im; return *this; }
    GaussRational& operator-=(const GaussRational& o) { re -= o.re; im -= o.im; return *this; }
    GaussRational& operator*=(const GaussRational& o) { *this = *this * o; return *this; }

    bool operator==(const GaussRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRational& o) const { return !(*this == o); }

    GaussRational pow(long e) const;

    // Exact square root if the value is a nonnegative rational square; throws otherwise.
    GaussRational sqrt_exact() const;

    // Canonical rendering: "a", "bi", or "a+bi"/"a-bi" (no enclosing parens).
    std::string str() const;
    // Parses what str() produces (plus leading '-' and plain "i").
    static GaussRational parse(const std::string& s);
};

} // namespace knotpoly

#endif // KNOTPOLY_GAUSS_RATIONAL_HPP
