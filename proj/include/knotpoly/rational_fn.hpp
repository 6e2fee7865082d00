#ifndef KNOTPOLY_RATIONAL_FN_HPP
#define KNOTPOLY_RATIONAL_FN_HPP

#include "knotpoly/multi_laurent.hpp"

namespace knotpoly {

// Quotient of two multivariable Laurent polynomials.
//
// Used as the coefficient field when eliminating linear systems and when
// inverting operator blocks whose entries are polynomials: intermediate
// values live here, and results are cleared back to MultiLaurent at the end.
//
// Fractions are kept reduced opportunistically: a monomial denominator is
// always folded into the numerator, and an exact polynomial division is
// attempted on construction. Beyond that, num/den pairs may share factors;
// equality is decided by cross-multiplication, which is exact regardless.
class RationalFn {
public:
    explicit RationalFn(MultiLaurent num);
    RationalFn(MultiLaurent num, MultiLaurent den);

    static RationalFn zero(CtxPtr ctx);
    static RationalFn one(CtxPtr ctx);

    const MultiLaurent& num() const { return num_; }
    const MultiLaurent& den() const { return den_; }
    CtxPtr ctx() const { return num_.ctx(); }

    bool is_zero() const { return num_.is_zero(); }

    RationalFn operator+(const RationalFn& o) const;
    RationalFn operator-(const RationalFn& o) const;
    RationalFn operator*(const RationalFn& o) const;
    RationalFn operator/(const RationalFn& o) const;
    RationalFn operator-() const;
    bool operator==(const RationalFn& o) const;
    bool operator!=(const RationalFn& o) const { return !(*this == o); }

    RationalFn inverse() const;

    // Exact conversion back to a Laurent polynomial; throws std::domain_error
    // if the denominator does not divide the numerator.
    MultiLaurent to_laurent() const;

    std::string str() const;

private:
    void reduce();

    MultiLaurent num_, den_;
};

} // namespace knotpoly

#endif // KNOTPOLY_RATIONAL_FN_HPP
