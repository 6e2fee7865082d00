#ifndef KNOTPOLY_MULTI_LAURENT_HPP
#define KNOTPOLY_MULTI_LAURENT_HPP

#include "knotpoly/gauss_rational.hpp"
#include "knotpoly/var_context.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace knotpoly {

/*
 * Multivariate Laurent polynomial over Gaussian rationals.
 *
 * Terms are keyed by a bit-packed internal exponent vector (16 bits per
 * variable, biased by 2^15) inside an ordered map, so iteration order is
 * lexicographic on the exponent vector with the first declared variable most
 * significant — the canonical term order used by to_string() and JSON.
 */
class MultiLaurent {
public:
    MultiLaurent() = default; // zero in a null context — only for containers
    explicit MultiLaurent(CtxPtr ctx) : ctx_(std::move(ctx)) {}

    static MultiLaurent constant(CtxPtr ctx, const GaussRational& c);
    // Monomial with internal exponents (length = ctx size).
    static MultiLaurent monomial(CtxPtr ctx, const GaussRational& c, const std::vector<int>& exps);
    // Display variable to an integer display power (internal power doubles for sqrt vars).
    static MultiLaurent var(CtxPtr ctx, const std::string& name, int power = 1);
    // name^(half/2): requires the variable to carry a square root.
    static MultiLaurent half_power(CtxPtr ctx, const std::string& name, int half);

    const CtxPtr& ctx() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    // The unique coefficient when the value is constant; throws otherwise.
    GaussRational constant_value() const;
    bool is_constant() const;

    MultiLaurent operator+(const MultiLaurent& o) const;
    MultiLaurent operator-(const MultiLaurent& o) const;
    MultiLaurent operator*(const MultiLaurent& o) const;
    MultiLaurent operator-() const;
    MultiLaurent& operator+=(const MultiLaurent& o);
    MultiLaurent& operator-=(const MultiLaurent& o);
    MultiLaurent operator*(const GaussRational& c) const;
    bool operator==(const MultiLaurent& o) const;
    bool operator!=(const MultiLaurent& o) const { return !(*this == o); }

    MultiLaurent pow(long e) const; // negative e allowed for single-term values

    // True when the value is a single term (a unit of the Laurent ring).
    bool is_monomial() const { return terms_.size() == 1; }
    MultiLaurent monomial_inverse() const; // requires is_monomial()

    // Per-term access with unpacked internal exponent vectors.
    std::vector<std::pair<std::vector<int>, GaussRational>> term_list() const;

    // Substitution: each display variable of this context is mapped to a
    // single-term value in the target context. Square-root variables require
    // the image to admit an exact square root (even internal exponents,
    // square coefficient); the positive root is taken.
    MultiLaurent substitute(const std::map<std::string, MultiLaurent>& images, CtxPtr target) const;

    // Re-expresses the value in a context containing all of this context's
    // variables (same name and sqrt flag).
    MultiLaurent promote(CtxPtr target) const;

    // Exact evaluation; point[i] is the value of the i-th INTERNAL variable
    // (i.e. of sqrt(name) when the variable carries a square root).
    GaussRational eval(const std::vector<GaussRational>& point) const;

    // Exact division: returns true and sets quotient when divisor divides
    // this exactly in the Laurent ring.
    bool divide_exact(const MultiLaurent& divisor, MultiLaurent& quotient) const;

    // Canonical text form, e.g. "t^-1 - 1 + t" or "2 + (1+1i)*t^(1/2)*s^2".
    std::string str() const;
    static MultiLaurent parse(CtxPtr ctx, const std::string& text);

    // JSON: {"context":[{"name":..,"sqrt":..}..],
    //        "terms":[{"exponents":[..],"re":"p/q","im":"p/q"}..]}
    // Exponents are internal (square-root) exponents.
    std::string to_json() const;
    static MultiLaurent from_json(CtxPtr ctx, const std::string& json);

    // --- internals shared with the operator layer ---
    using Key = uint64_t;
    static Key pack(const std::vector<int>& exps);
    static std::vector<int> unpack(Key k, size_t nvars);
    static Key key_mul(Key a, Key b); // exponent addition with range checks
    const std::map<Key, GaussRational>& raw_terms() const { return terms_; }
    void raw_add_term(Key k, const GaussRational& c); // canonicalizing insert

private:
    void check_ctx(const MultiLaurent& o) const;
    CtxPtr ctx_;
    std::map<Key, GaussRational> terms_;
};

inline MultiLaurent operator*(const GaussRational& c, const MultiLaurent& p) { return p * c; }

} // namespace knotpoly

#endif // KNOTPOLY_MULTI_LAURENT_HPP
