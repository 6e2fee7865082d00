#ifndef KNOTPOLY_INVARIANTS_HPP
#define KNOTPOLY_INVARIANTS_HPP

#include "knotpoly/braid.hpp"

#include <string>

namespace knotpoly {

// A link-polynomial value: which invariant, the braid it was computed from,
// the closure scalar, and the component count of the closed link.
struct InvariantValue {
    std::string name;
    MultiLaurent value;
    BraidWord braid;
    int components = 1;

    std::string to_json() const;
};

// The five closure invariants of the built-in matrix catalog, one front end
// per matrix.  Contexts: alexander {t}, v1/lambda1 {t0,t1}, lambda-1 {s,t},
// sl3 {t1,t2}; square roots where the matrix entries need them.
InvariantValue alexander(const BraidWord& beta);
InvariantValue v1(const BraidWord& beta);
InvariantValue lambda1(const BraidWord& beta);
InvariantValue lambda_minus1(const BraidWord& beta);
InvariantValue delta_sl3(const BraidWord& beta);

// By catalog name ("alexander", "v1", "lambda1", "lambda-1", "sl3"); throws
// std::invalid_argument on an unknown name.
InvariantValue compute_invariant(const std::string& name, const BraidWord& beta);

// The product pair on V (x) W: the braiding conjugated by the middle swap,
//   Rhat[(x1 y1),(x2 y2) <- (u1 v1),(u2 v2)] = R[(x1,x2)<-(u1,u2)] * R'[(y1,y2)<-(v1,v2)],
// with closure operator h1 (x) h2.  The two contexts are merged by variable
// name (a shared name must agree on its square-root flag); gradings lift
// factor-wise.  The axioms are re-verified at construction and a failure
// throws std::logic_error — the construction preserves them, so a throw
// means corrupted inputs.  The closure invariant of the result is the
// product of the two factors' invariants.
EnhancedRMatrix tensor_product_pair(const EnhancedRMatrix& E1, const EnhancedRMatrix& E2);

// Outcome of comparing two polynomial computations of the same quantity,
// with both sides expressed in the context of the right-hand side.
struct EqualityReport {
    bool pass = false;
    MultiLaurent lhs;
    MultiLaurent rhs;

    std::string str() const;
};

// lambda1 of the closure against the product of its Alexander polynomials
// in the two variables: lambda1(t0, t1) vs alexander(t0) * alexander(t1).
EqualityReport check_alexander_factorization(const BraidWord& beta);

// lambda-1 of the closure under s -> t1^-2, t -> t2^-2 against sl3 computed
// directly in (t1, t2); the two eight-dimensional computations share no data.
EqualityReport check_sl3_specialization(const BraidWord& beta);

// Alexander values of the three closures differing at one crossing slot:
// beta with an extra positive crossing at the generator, with an extra
// negative one, and unchanged.  The residual
//     plus - minus - (t^(-1/2) - t^(1/2)) * smoothed
// vanishes identically.  Throws std::invalid_argument unless
// 1 <= position <= strands-1.
struct SkeinTriple {
    MultiLaurent plus;
    MultiLaurent minus;
    MultiLaurent smoothed;
    MultiLaurent residual;
};
SkeinTriple skein_triple(const BraidWord& beta, int position);

// True when the value has integer display exponents and Gaussian-integer
// coefficients.  On failure, when offending is non-null it receives the
// first violating term in display form.
bool integral_laurent(const MultiLaurent& v, std::string* offending = nullptr);

// Divides out the unit monomial that closure normalization can attach:
// per-variable minimum exponents are shifted to zero and a leading unit
// coefficient (+/-1, +/-i) is normalized to +1.  Zero is returned unchanged.
MultiLaurent cleared_of_unit(const MultiLaurent& v);

} // namespace knotpoly

#endif
