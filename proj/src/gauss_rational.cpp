#include "knotpoly/gauss_rational.hpp"

#include <stdexcept>

namespace knotpoly {

GaussRational GaussRational::operator/(const GaussRational& o) const {
    if (o.is_zero()) throw std::invalid_argument("GaussRational: division by zero");
    // (a+bi)/(c+di) = (a+bi)(c-di)/(c^2+d^2)
    mpq_class n = o.re * o.re + o.im * o.im;
    return GaussRational((re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n);
}

GaussRational GaussRational::pow(long e) const {
    if (e == 0) return GaussRational(1);
    GaussRational base = *this;
    if (e < 0) {
        base = GaussRational(1) / base;
        e = -e;
    }
    GaussRational acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

GaussRational GaussRational::sqrt_exact() const {
    if (!is_real() || sgn(re) < 0)
        throw std::invalid_argument("GaussRational: sqrt of a non-square value");
    mpz_class num = re.get_num(), den = re.get_den();
    mpz_class rn, rd;
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0)
        throw std::invalid_argument("GaussRational: sqrt of a non-square value");
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return GaussRational(mpq_class(rn, rd));
}

std::string GaussRational::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (sgn(re) != 0) out += re.get_str();
    if (sgn(im) != 0) {
        if (sgn(re) != 0 && sgn(im) > 0) out += "+";
        if (im == -1) out += "-";
        else if (im != 1) out += im.get_str();
        out += "i";
    }
    return out;
}

GaussRational GaussRational::parse(const std::string& s) {
    // Accepts "a", "a+bi", "a-bi", "bi", "i", "-i" with a, b rationals "p" or "p/q".
    size_t pos = 0;
    auto read_rational = [&](bool* saw_digits) -> mpq_class {
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        size_t digits_start = pos;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        *saw_digits = pos > digits_start;
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        if (!*saw_digits) {
            // bare sign (for "i" / "-i"): value is +-1
            return mpq_class(s[start] == '-' ? -1 : 1);
        }
        mpq_class q(s.substr(start, pos - start));
        q.canonicalize();
        return q;
    };

    bool saw = false;
    mpq_class first = read_rational(&saw);
    if (pos < s.size() && s[pos] == 'i') {
        ++pos;
        if (pos != s.size()) throw std::invalid_argument("GaussRational: trailing input in '" + s + "'");
        return GaussRational(mpq_class(0), first);
    }
    if (!saw) throw std::invalid_argument("GaussRational: cannot parse '" + s + "'");
    if (pos == s.size()) return GaussRational(first);
    // remainder must be the imaginary part ending in 'i'
    bool saw2 = false;
    mpq_class second = read_rational(&saw2);
    if (pos >= s.size() || s[pos] != 'i')
        throw std::invalid_argument("GaussRational: cannot parse '" + s + "'");
    ++pos;
    if (pos != s.size()) throw std::invalid_argument("GaussRational: trailing input in '" + s + "'");
    return GaussRational(first, second);
}

} // namespace knotpoly
