#ifndef KNOTPOLY_BRAID_HPP
#define KNOTPOLY_BRAID_HPP

#include "knotpoly/enhanced_rmatrix.hpp"

#include <string>
#include <vector>

namespace knotpoly {

// A braid word on `strands` strands.  Each letter is a nonzero signed integer
// k with |k| <= strands-1: +k crosses strand k over strand k+1, -k is the
// inverse crossing.  Letters are listed bottom to top.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    // Throws std::invalid_argument when strands < 1 or a letter is out of
    // range (zero, or |k| > strands-1).
    void validate() const;

    // Text form: an optional "strands=<n>;" header (default 1) followed by
    // whitespace-separated signed letters, e.g. "strands=2; 1 1 1".
    static BraidWord parse(const std::string& text);
    std::string str() const;

    // JSON form: {"strands": n, "letters": [...]}.
    static BraidWord from_json(const std::string& json);
    std::string to_json() const;

    // The permutation of strand positions induced by the word: entry i-1
    // holds the top position reached by the strand entering at bottom
    // position i (both 1-based).
    std::vector<int> permutation() const;
};

// Number of components of the link obtained by closing the braid (cycle
// count of the underlying permutation).
int component_count(const BraidWord& beta);

// True when the two words are equal as sequences (same strand count, same
// letters); used by tests and the move generators below.
bool operator==(const BraidWord& a, const BraidWord& b);

// gamma beta gamma^{-1} on the same strand count.  The closure of the result
// is the same link as the closure of beta.
BraidWord markov_conjugate(const BraidWord& beta, const BraidWord& gamma);

// beta on strands+1 strands with a final letter +/-(strands) appended.  The
// closure of the result is the same link as the closure of beta.
BraidWord markov_stabilize(const BraidWord& beta, int sign);

// The braid representation built from an enhanced matrix: each letter +/-k
// acts as R^{+/-1} embedded on tensor factors (k, k+1) of V^(x) strands, and
// letters compose bottom to top, so rho(w1.w2) = rho(w2) o rho(w1).
// Throws std::invalid_argument on out-of-range letters.
SparseOp rho(const EnhancedRMatrix& E, const BraidWord& beta);

// Result of closing a braid: the one-factor operator obtained by tracing out
// factors 2..n against the closure operator h, the associated scalar (the
// operator is a scalar multiple of the identity for every catalog matrix;
// the scalar also equals the full h-decorated trace divided by dim V), and
// the component count of the closed link.
struct ClosureResult {
    SparseOp op = SparseOp(1, 1, nullptr);
    MultiLaurent scalar;
    int components = 1;
};

// Closes rho(E, beta) by tracing factors n, n-1, ..., 2 of
// (id (x) h^(x)(n-1)) o rho(E, beta), innermost last.  The scalar is computed
// independently as trace/dim and cross-checked against the operator form.
// Throws std::domain_error when the closure operator is not a scalar multiple
// of the identity (the matrix then fails the partial-closure property, or
// there is a bug upstream).
ClosureResult closure_mrt(const EnhancedRMatrix& E, const BraidWord& beta);

// The two ways of closing one factor of a two-factor operator F:
//   left_closure  = tr_2((id (x) h) o F)      -- closes the right strand up
//   right_closure = tr_1(F o (h^{-1} (x) id)) -- closes the left strand down
// For operators F coming from braids both agree, and the common value is a
// scalar multiple of the identity.  Throws std::invalid_argument unless F has
// arity 2.
SparseOp left_closure(const EnhancedRMatrix& E, const SparseOp& F);
SparseOp right_closure(const EnhancedRMatrix& E, const SparseOp& F);

} // namespace knotpoly

#endif
