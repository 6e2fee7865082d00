#ifndef KNOTPOLY_ENHANCED_RMATRIX_HPP
#define KNOTPOLY_ENHANCED_RMATRIX_HPP

#include "knotpoly/sparse_op.hpp"

#include <optional>
#include <string>
#include <vector>

namespace knotpoly {

// An integer grading on the basis of the underlying vector space.  Each basis
// vector (1-based index i, stored at weights[i-1]) carries an integer weight
// vector; all weight vectors of one grading have the same length.  A grading
// extends additively to tensor products, and an operator "preserves" it when
// every nonzero entry connects input and output multi-indices of equal total
// weight.
struct Grading {
    std::string label;
    std::vector<std::vector<long>> weights;

    // Total weight of a multi-index (1-based entries), component-wise sum.
    std::vector<long> total(const std::vector<int>& idx) const;
};

// A braiding operator together with the pivotal data needed to close braids
// into links: an invertible R acting on two tensor factors and an invertible
// one-factor operator h.  The pair must satisfy the identities checked by
// check_axioms below; `has_enhancement` is false when the R-matrix is known
// to admit no valid h (the h field then holds the natural candidate so the
// failure can be inspected).
struct EnhancedRMatrix {
    std::string name;
    size_t dim = 1;
    CtxPtr ctx;
    // Placeholder-initialized so the struct can be built field by field.
    SparseOp R = SparseOp(1, 2, nullptr);
    SparseOp R_inv = SparseOp(1, 2, nullptr);
    SparseOp h = SparseOp(1, 1, nullptr);
    std::vector<Grading> gradings;
    bool has_enhancement = true;
    std::string enhancement_note;  // set when has_enhancement is false

    std::string to_json() const;
    static EnhancedRMatrix from_json(const std::string& json);
};

// One verification: `pass` is true when the defining identity holds exactly;
// otherwise `residual` holds the (nonzero) difference operator.
struct AxiomCheck {
    std::string name;
    bool pass = false;
    std::optional<SparseOp> residual;  // present exactly when !pass
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;

    bool all_pass() const;
    const AxiomCheck* find(const std::string& name) const;
    std::string to_json() const;
    std::string str() const;  // one line per check
};

// Verifies the defining identities of an enhanced R-matrix:
//   inverse                      R∘R_inv = R_inv∘R = id
//   h-commutation                R∘(h⊗h) = (h⊗h)∘R
//   right-partial-trace          tr₂((id⊗h)∘R) = id
//   right-partial-trace-inverse  tr₂((id⊗h)∘R_inv) = id
//   duality                      rot_left(R_inv)∘rot_right((id⊗h)∘R∘(h⁻¹⊗id)) = id
//   yang-baxter                  (R⊗id)(id⊗R)(R⊗id) = (id⊗R)(R⊗id)(id⊗R)
// Failures are reported as data, never thrown.
AxiomReport check_axioms(const EnhancedRMatrix& E);

// Checks that every nonzero entry of R and R_inv connects multi-indices of
// equal total weight under the given grading.
bool check_grading_preserved(const EnhancedRMatrix& E, const Grading& g);

// One solution candidate for a diagonal h paired with a given R.
struct DiagonalEnhancementCandidate {
    std::vector<MultiLaurent> diag;  // proposed diagonal of h
    long solution_dim = 0;           // dimension of the solution space of the
                                     // linear trace constraints
    AxiomReport report;              // full verification with this h
    bool accepted = false;           // report.all_pass()
};

// Solves for a diagonal h with tr₂((id⊗h)∘R^{±1}) = id.  The trace condition
// is linear in the diagonal entries of h; the affine solution set is computed
// exactly, a representative is formed (free parameters set to 1), and each
// candidate is then run through the full check_axioms.  An empty result means
// the linear system is inconsistent or the representative is not invertible.
std::vector<DiagonalEnhancementCandidate> solve_diagonal_enhancement(
    const SparseOp& R, const SparseOp& R_inv);

}  // namespace knotpoly

#endif  // KNOTPOLY_ENHANCED_RMATRIX_HPP
