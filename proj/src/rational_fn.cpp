#include "knotpoly/rational_fn.hpp"

#include <stdexcept>

namespace knotpoly {

RationalFn::RationalFn(MultiLaurent num)
    : num_(std::move(num)), den_(MultiLaurent::constant(num_.ctx(), GaussRational(1))) {}

RationalFn::RationalFn(MultiLaurent num, MultiLaurent den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RationalFn: zero denominator");
    reduce();
}

RationalFn RationalFn::zero(CtxPtr ctx) {
    return RationalFn(MultiLaurent(ctx));
}

RationalFn RationalFn::one(CtxPtr ctx) {
    return RationalFn(MultiLaurent::constant(std::move(ctx), GaussRational(1)));
}

void RationalFn::reduce() {
    if (num_.is_zero()) {
        den_ = MultiLaurent::constant(num_.ctx(), GaussRational(1));
        return;
    }
    if (den_.term_count() == 1) {
        num_ = num_ * den_.monomial_inverse();
        den_ = MultiLaurent::constant(num_.ctx(), GaussRational(1));
        return;
    }
    MultiLaurent q(num_.ctx());
    if (num_.divide_exact(den_, q)) {
        num_ = std::move(q);
        den_ = MultiLaurent::constant(num_.ctx(), GaussRational(1));
        return;
    }
    // Normalize the denominator so equal fractions tend to look equal:
    // make its lex-leading term the constant 1 by moving a monomial factor
    // into the numerator.
    auto lead = den_.term_list().back();
    std::vector<int> neg = lead.first;
    for (int& e : neg) e = -e;
    MultiLaurent unit = MultiLaurent::monomial(num_.ctx(), GaussRational(1) / lead.second, neg);
    num_ = num_ * unit;
    den_ = den_ * unit;
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
    return RationalFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator-(const RationalFn& o) const {
    return RationalFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
    // Cross-reduce first: (a/b)(c/d) with d | a or b | c collapses cheaply.
    MultiLaurent q(num_.ctx());
    if (!o.den_.is_constant() && num_.divide_exact(o.den_, q))
        return RationalFn(q * o.num_, den_);
    if (!den_.is_constant() && o.num_.divide_exact(den_, q))
        return RationalFn(num_ * q, o.den_);
    return RationalFn(num_ * o.num_, den_ * o.den_);
}

RationalFn RationalFn::operator/(const RationalFn& o) const {
    return *this * o.inverse();
}

RationalFn RationalFn::operator-() const {
    RationalFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFn RationalFn::inverse() const {
    if (num_.is_zero()) throw std::invalid_argument("RationalFn: inverse of zero");
    return RationalFn(den_, num_);
}

bool RationalFn::operator==(const RationalFn& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

MultiLaurent RationalFn::to_laurent() const {
    if (den_.is_constant() && den_.constant_value().is_one()) return num_;
    MultiLaurent q(num_.ctx());
    if (!num_.divide_exact(den_, q))
        throw std::domain_error("RationalFn: value is not a Laurent polynomial");
    return q;
}

std::string RationalFn::str() const {
    if (den_.is_constant() && den_.constant_value().is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

} // namespace knotpoly
