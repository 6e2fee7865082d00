#ifndef KNOTPOLY_ISOTOPY_SOLVER_HPP
#define KNOTPOLY_ISOTOPY_SOLVER_HPP

#include "knotpoly/enhanced_rmatrix.hpp"
#include "knotpoly/rational_fn.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace knotpoly {

/*
 * Exact linear-algebra analysis of the operators that can sit inside a closed
 * braid without breaking the closure bookkeeping.
 *
 * Two families of constraints are analyzed, both homogeneous and linear in
 * the unknown operator F:
 *
 *   one factor   (id ⊗ F) ∘ R = R ∘ (F ⊗ id)
 *                — F slides through a crossing.  For the catalog matrices the
 *                solution space is one-dimensional (scalar multiples of the
 *                identity), which is what makes a closed-off sub-diagram
 *                contribute a well-defined scalar.
 *
 *   two factors  R² ∘ F = F ∘ R²
 *                (R⊗id) ∘ (id⊗R) ∘ (F⊗id) = (id⊗F) ∘ (R⊗id) ∘ (id⊗R)
 *                — F commutes with the two-strand braid action and slides
 *                through a pair of crossings.  On the full solution space the
 *                two one-factor closures of F (left_closure / right_closure
 *                from braid.hpp) agree, which is the structural fact that
 *                makes the h-decorated closure independent of where a link
 *                diagram is cut open.
 *
 * The unknown F is restricted to the entries allowed by the gradings
 * registered on the matrix (all other entries vanish for grading-preserving
 * operators), the constraints become a linear system over the Laurent
 * coefficient ring, and the system is eliminated fraction-free so the
 * reported rank is exact.  A probabilistic cross-check evaluates the system
 * at random rational points and recomputes the rank over the scalars.
 */

// The most general operator shape compatible with every grading registered
// on a matrix: one unknown per (row, col) pair of flat multi-indices whose
// input and output total weights agree under each grading.  Positions are
// 0-based flat indices into the d^arity-dimensional tensor power, listed in
// row-major scan order.
struct GradedAnsatz {
    size_t dim = 1;
    size_t arity = 1;
    std::vector<std::pair<uint64_t, uint64_t>> positions;

    size_t size() const { return positions.size(); }

    // Index of the unknown sitting at (row, col), or -1 when the pair is not
    // an allowed position.
    long slot_of(uint64_t row, uint64_t col) const;

    // Display name of one unknown, e.g. "x(2,1|1,2)" for the entry mapping
    // basis vector (1,2) to basis vector (2,1).
    std::string param_name(size_t slot) const;

    std::string str() const;
};

// Enumerates the grading-compatible positions for an operator on `arity`
// tensor factors.  Throws std::invalid_argument when the matrix carries no
// gradings or arity < 1.
GradedAnsatz graded_ansatz(const EnhancedRMatrix& E, size_t arity);

// Homogeneous linear system over the ansatz unknowns.  Rows are sparse maps
// from unknown index to Laurent coefficient (coefficients arise as products
// of R-matrix entries, so they are polynomial; rows are normalized by
// clearing monomial and rational content and deduplicated on insertion).
struct LinearSystem {
    CtxPtr ctx;
    size_t unknowns = 0;
    std::vector<std::map<size_t, MultiLaurent>> rows;

    // Normalizes, drops zero rows, and skips rows already present.
    void add_row(std::map<size_t, MultiLaurent> row);

    std::string str() const;

private:
    std::set<std::string> seen_;
};

// Constraints for a one-factor operator sliding through a crossing.
// Requires an arity-1 ansatz on E's dimension.
LinearSystem build_slide_system(const EnhancedRMatrix& E, const GradedAnsatz& a);

// Constraints for a two-factor operator commuting with the two-strand braid
// action.  Requires an arity-2 ansatz on E's dimension.
LinearSystem build_pair_system(const EnhancedRMatrix& E, const GradedAnsatz& a);

// Exact rank data for a system.  `matrix_rank` is the rank of the coefficient
// matrix, computed by fraction-free elimination over the Laurent ring;
// `solution_dim` = unknowns - matrix_rank is the number of free parameters of
// the solution space.  The symbolic value is cross-checked by exact
// evaluation at `probe_points` random rational points (degenerate points —
// a variable at 0 or 1, or two variables equal — are excluded and a point
// whose specialized rank drops is resampled).
struct RankReport {
    size_t unknowns = 0;
    size_t matrix_rank = 0;
    size_t solution_dim = 0;
    size_t probe_points = 0;
    bool probes_agree = false;

    std::string str() const;
};

RankReport rank(const LinearSystem& sys, uint64_t seed = 0);

// Parametric solution of a system: every unknown written as a rational-
// function combination of the free unknowns.
struct ParametricSolution {
    size_t unknowns = 0;
    // Ansatz slots left free, ascending.
    std::vector<size_t> free_slots;
    // coeff[u][k] is the coefficient of free_slots[k] in unknown u; a free
    // unknown's row is the corresponding unit vector.
    std::vector<std::vector<RationalFn>> coeff;
    // True when the requested free set was consistent (equals the actual
    // free set); always true when no preference was given.
    bool preferred_free_respected = true;

    size_t free_count() const { return free_slots.size(); }

    // One line per bound unknown: "x(..|..) = <coeff>*x(..|..) + ...".
    std::string relations_str(const GradedAnsatz& a) const;
};

// Eliminates the system and back-substitutes.  When `preferred_free` slots
// are given, pivots avoid those columns so they stay free if the system
// permits it; `preferred_free_respected` records whether that succeeded.
ParametricSolution solve_system(const LinearSystem& sys,
                                const std::vector<size_t>& preferred_free = {});

// The two one-factor closures of a two-factor operator with rational-function
// entries, matching left_closure / right_closure from braid.hpp:
//   left  = tr₂((id ⊗ h) ∘ F)      right = tr₁(F ∘ (h⁻¹ ⊗ id))
// Entries are dense d×d, row-major, 0-based.
struct ClosurePair {
    std::vector<RationalFn> left, right;
};

ClosurePair closure_pair(
    const EnhancedRMatrix& E,
    const std::vector<std::pair<std::pair<uint64_t, uint64_t>, RationalFn>>& entries);

// Both closures of every basis solution of a two-factor system, and whether
// they agree — checked symbolically, so agreement covers the entire solution
// space.  left[k]/right[k] belong to the k-th free parameter.
struct ClosureReport {
    size_t free_count = 0;
    bool equal = false;
    std::vector<std::vector<RationalFn>> left, right;

    std::string str() const;
};

// Throws std::invalid_argument when the ansatz is not arity-2 on E's
// dimension or E carries no valid enhancement.
ClosureReport check_closures(const EnhancedRMatrix& E, const GradedAnsatz& a,
                             const ParametricSolution& sol);

// True when the concrete operator F satisfies every row of the system: F is
// supported on the ansatz positions and each constraint evaluates to zero.
bool in_solution_space(const LinearSystem& sys, const GradedAnsatz& a, const SparseOp& F);

// Full pipeline for one-factor operators: ansatz, slide system, rank with
// probes, solution, and the scalar verdict (`scalar_only` is true when the
// solution space is exactly the scalar multiples of the identity).
struct OneFactorAnalysis {
    GradedAnsatz ansatz;
    RankReport rank;
    ParametricSolution solution;
    bool scalar_only = false;

    bool all_pass() const { return rank.probes_agree && scalar_only; }
    std::string str() const;
};

OneFactorAnalysis analyze_one_factor(const EnhancedRMatrix& E, uint64_t seed = 0);

// Full pipeline for two-factor operators: ansatz, pair system, rank with
// probes, parametric solution (honoring `preferred_free`), and the closure
// comparison over the whole solution space.
struct TwoFactorAnalysis {
    GradedAnsatz ansatz;
    RankReport rank;
    ParametricSolution solution;
    ClosureReport closures;

    bool all_pass() const { return rank.probes_agree && closures.equal; }
    std::string str() const;
};

TwoFactorAnalysis analyze_two_factor(const EnhancedRMatrix& E,
                                     const std::vector<size_t>& preferred_free = {},
                                     uint64_t seed = 0);

} // namespace knotpoly

#endif // KNOTPOLY_ISOTOPY_SOLVER_HPP
