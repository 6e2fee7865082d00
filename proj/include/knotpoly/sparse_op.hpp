#ifndef KNOTPOLY_SPARSE_OP_HPP
#define KNOTPOLY_SPARSE_OP_HPP

#include "knotpoly/multi_laurent.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace knotpoly {

// Sparse endomorphism of V^⊗n, dim(V) = d, with MultiLaurent entries.
//
// Multi-indices are 1-based tuples in {1..d}^n and flatten row-major with the
// leftmost tensor factor most significant, matching the basis order
// (e₁⊗e₁, e₁⊗e₂, …, e₁⊗e_d, e₂⊗e₁, …). The entry at (row, col) is the
// coefficient of the row basis vector in the image of the col basis vector,
// i.e. columns index inputs and rows index outputs.
//
// Storage is row-grouped: rows_[r][c] = entry. No zero entries are stored.
// Values are immutable after construction aside from set(); all algebraic
// operations return new operators.
class SparseOp {
public:
    SparseOp(size_t dim, size_t arity, CtxPtr ctx);

    static SparseOp identity(size_t dim, size_t arity, CtxPtr ctx);
    // Arity-1 operator with the given diagonal.
    static SparseOp diagonal(CtxPtr ctx, const std::vector<MultiLaurent>& diag);
    // Arity-2 operator on V ⊗ V from a dense d²×d² row-major table.
    static SparseOp from_rows(size_t dim, size_t arity, CtxPtr ctx,
                              const std::vector<std::vector<MultiLaurent>>& rows);

    size_t dim() const { return dim_; }
    size_t arity() const { return arity_; }
    uint64_t flat_dim() const { return flat_dim_; }
    CtxPtr ctx() const { return ctx_; }

    static uint64_t flatten(const std::vector<int>& idx, size_t dim);
    static std::vector<int> unflatten(uint64_t flat, size_t dim, size_t arity);

    void set(const std::vector<int>& row, const std::vector<int>& col, const MultiLaurent& v);
    void set_flat(uint64_t row, uint64_t col, const MultiLaurent& v);
    MultiLaurent at(const std::vector<int>& row, const std::vector<int>& col) const;
    MultiLaurent at_flat(uint64_t row, uint64_t col) const;

    const std::map<uint64_t, std::map<uint64_t, MultiLaurent>>& rows() const { return rows_; }
    size_t entry_count() const;
    bool is_zero() const { return rows_.empty(); }
    void for_each(const std::function<void(uint64_t, uint64_t, const MultiLaurent&)>& fn) const;

    // Same underlying matrix viewed with a different (dim, arity) factorization
    // of the same flat dimension; used to compose maps like V⊗V → W whose two
    // sides are graded differently.
    SparseOp reshaped(size_t dim, size_t arity) const;

    SparseOp compose(const SparseOp& o) const; // (*this) ∘ o: o acts first
    SparseOp tensor(const SparseOp& o) const;  // this on the left factors
    SparseOp operator+(const SparseOp& o) const;
    SparseOp operator-(const SparseOp& o) const;
    SparseOp operator*(const MultiLaurent& s) const;
    SparseOp operator*(const GaussRational& s) const;
    bool operator==(const SparseOp& o) const;
    bool operator!=(const SparseOp& o) const { return !(*this == o); }

    // Identity on n factors except factors i < j, where this (arity 2) acts.
    SparseOp embed_two_site(size_t i, size_t j, size_t n) const;

    // Trace out tensor factor i (1-based), yielding an operator on n−1 factors.
    SparseOp partial_trace(size_t i) const;
    MultiLaurent trace() const;

    // Index rotations on arity-2 operators (partial transposes exchanging one
    // input leg with one output leg). With entries written A[row=(k,l), col=(i,j)]:
    //   rot_left:  out[row=(l,j), col=(k,i)] = A[row=(k,l), col=(i,j)]
    //   rot_right: out[row=(i,k), col=(j,l)] = A[row=(k,l), col=(i,j)]
    // They are mutually inverse index permutations.
    SparseOp rot_left() const;
    SparseOp rot_right() const;

    std::optional<MultiLaurent> as_scalar_multiple_of_identity() const;

    // Exact inverse. The support is first split into connected blocks;
    // one-entry-per-row blocks invert term by term, the rest by elimination
    // over the fraction field. Throws std::domain_error if the matrix is
    // singular or an inverse entry fails to clear to Laurent form.
    SparseOp invert() const;

    // Entrywise variable substitution / context promotion (see MultiLaurent).
    SparseOp substitute(const std::map<std::string, MultiLaurent>& images, CtxPtr target) const;
    SparseOp promote(CtxPtr target) const;

    std::string to_json() const;
    static SparseOp from_json(CtxPtr ctx, const std::string& json);
    std::string str() const; // entry listing, for diagnostics

private:
    void check_shape(const SparseOp& o) const;

    size_t dim_, arity_;
    uint64_t flat_dim_;
    CtxPtr ctx_;
    std::map<uint64_t, std::map<uint64_t, MultiLaurent>> rows_;
};

} // namespace knotpoly

#endif // KNOTPOLY_SPARSE_OP_HPP
