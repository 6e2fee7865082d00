#include "knotpoly/sparse_op.hpp"

#include "knotpoly/rational_fn.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace knotpoly {

namespace {

uint64_t pow_u64(uint64_t base, size_t exp) {
    uint64_t r = 1;
    for (size_t i = 0; i < exp; ++i) {
        if (r > UINT64_MAX / base) throw std::overflow_error("SparseOp: tensor space too large");
        r *= base;
    }
    return r;
}

} // namespace

SparseOp::SparseOp(size_t dim, size_t arity, CtxPtr ctx)
    : dim_(dim), arity_(arity), flat_dim_(pow_u64(dim, arity)), ctx_(std::move(ctx)) {
    if (dim == 0) throw std::invalid_argument("SparseOp: dimension must be positive");
}

SparseOp SparseOp::identity(size_t dim, size_t arity, CtxPtr ctx) {
    SparseOp op(dim, arity, ctx);
    MultiLaurent one = MultiLaurent::constant(std::move(ctx), GaussRational(1));
    for (uint64_t k = 0; k < op.flat_dim_; ++k) op.rows_[k][k] = one;
    return op;
}

SparseOp SparseOp::diagonal(CtxPtr ctx, const std::vector<MultiLaurent>& diag) {
    SparseOp op(diag.size(), 1, std::move(ctx));
    for (uint64_t k = 0; k < diag.size(); ++k)
        if (!diag[k].is_zero()) op.rows_[k][k] = diag[k];
    return op;
}

SparseOp SparseOp::from_rows(size_t dim, size_t arity, CtxPtr ctx,
                             const std::vector<std::vector<MultiLaurent>>& rows) {
    SparseOp op(dim, arity, std::move(ctx));
    if (rows.size() != op.flat_dim_)
        throw std::invalid_argument("SparseOp: dense table has wrong row count");
    for (uint64_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != op.flat_dim_)
            throw std::invalid_argument("SparseOp: dense table has wrong column count");
        for (uint64_t c = 0; c < rows[r].size(); ++c)
            if (!rows[r][c].is_zero()) op.rows_[r][c] = rows[r][c];
    }
    return op;
}

uint64_t SparseOp::flatten(const std::vector<int>& idx, size_t dim) {
    uint64_t flat = 0;
    for (int v : idx) {
        if (v < 1 || static_cast<size_t>(v) > dim) throw std::out_of_range("SparseOp: index out of range");
        flat = flat * dim + static_cast<uint64_t>(v - 1);
    }
    return flat;
}

std::vector<int> SparseOp::unflatten(uint64_t flat, size_t dim, size_t arity) {
    std::vector<int> idx(arity);
    for (size_t k = arity; k-- > 0;) {
        idx[k] = static_cast<int>(flat % dim) + 1;
        flat /= dim;
    }
    return idx;
}

void SparseOp::set(const std::vector<int>& row, const std::vector<int>& col, const MultiLaurent& v) {
    if (row.size() != arity_ || col.size() != arity_)
        throw std::invalid_argument("SparseOp: multi-index arity mismatch");
    set_flat(flatten(row, dim_), flatten(col, dim_), v);
}

void SparseOp::set_flat(uint64_t row, uint64_t col, const MultiLaurent& v) {
    if (row >= flat_dim_ || col >= flat_dim_) throw std::out_of_range("SparseOp: index out of range");
    if (v.is_zero()) {
        auto it = rows_.find(row);
        if (it != rows_.end()) {
            it->second.erase(col);
            if (it->second.empty()) rows_.erase(it);
        }
        return;
    }
    rows_[row][col] = v;
}

MultiLaurent SparseOp::at(const std::vector<int>& row, const std::vector<int>& col) const {
    return at_flat(flatten(row, dim_), flatten(col, dim_));
}

MultiLaurent SparseOp::at_flat(uint64_t row, uint64_t col) const {
    auto it = rows_.find(row);
    if (it != rows_.end()) {
        auto jt = it->second.find(col);
        if (jt != it->second.end()) return jt->second;
    }
    return MultiLaurent(ctx_);
}

size_t SparseOp::entry_count() const {
    size_t n = 0;
    for (const auto& [r, row] : rows_) n += row.size();
    return n;
}

void SparseOp::for_each(const std::function<void(uint64_t, uint64_t, const MultiLaurent&)>& fn) const {
    for (const auto& [r, row] : rows_)
        for (const auto& [c, v] : row) fn(r, c, v);
}

SparseOp SparseOp::reshaped(size_t dim, size_t arity) const {
    SparseOp out(dim, arity, ctx_);
    if (out.flat_dim_ != flat_dim_)
        throw std::invalid_argument("SparseOp: reshape must preserve total dimension");
    out.rows_ = rows_;
    return out;
}

void SparseOp::check_shape(const SparseOp& o) const {
    if (dim_ != o.dim_ || arity_ != o.arity_) throw std::invalid_argument("SparseOp: shape mismatch");
    if (!ctx_->same_as(*o.ctx_)) throw std::invalid_argument("SparseOp: context mismatch");
}

SparseOp SparseOp::compose(const SparseOp& o) const {
    check_shape(o);
    SparseOp out(dim_, arity_, ctx_);
    for (const auto& [r, row] : rows_) {
        std::map<uint64_t, MultiLaurent> acc;
        for (const auto& [k, va] : row) {
            auto it = o.rows_.find(k);
            if (it == o.rows_.end()) continue;
            for (const auto& [c, vb] : it->second) {
                auto [slot, fresh] = acc.try_emplace(c, ctx_);
                slot->second += va * vb;
            }
        }
        for (auto& [c, v] : acc)
            if (!v.is_zero()) out.rows_[r].emplace(c, std::move(v));
        if (out.rows_.count(r) && out.rows_[r].empty()) out.rows_.erase(r);
    }
    return out;
}

SparseOp SparseOp::tensor(const SparseOp& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("SparseOp: dim mismatch");
    if (!ctx_->same_as(*o.ctx_)) throw std::invalid_argument("SparseOp: context mismatch");
    SparseOp out(dim_, arity_ + o.arity_, ctx_);
    for (const auto& [ra, rowa] : rows_)
        for (const auto& [ca, va] : rowa)
            for (const auto& [rb, rowb] : o.rows_)
                for (const auto& [cb, vb] : rowb)
                    out.rows_[ra * o.flat_dim_ + rb][ca * o.flat_dim_ + cb] = va * vb;
    return out;
}

SparseOp SparseOp::operator+(const SparseOp& o) const {
    check_shape(o);
    SparseOp out = *this;
    for (const auto& [r, row] : o.rows_)
        for (const auto& [c, v] : row) out.set_flat(r, c, out.at_flat(r, c) + v);
    return out;
}

SparseOp SparseOp::operator-(const SparseOp& o) const {
    check_shape(o);
    SparseOp out = *this;
    for (const auto& [r, row] : o.rows_)
        for (const auto& [c, v] : row) out.set_flat(r, c, out.at_flat(r, c) - v);
    return out;
}

SparseOp SparseOp::operator*(const MultiLaurent& s) const {
    SparseOp out(dim_, arity_, ctx_);
    if (s.is_zero()) return out;
    for (const auto& [r, row] : rows_)
        for (const auto& [c, v] : row) out.rows_[r][c] = v * s;
    return out;
}

SparseOp SparseOp::operator*(const GaussRational& s) const {
    return *this * MultiLaurent::constant(ctx_, s);
}

bool SparseOp::operator==(const SparseOp& o) const {
    if (dim_ != o.dim_ || arity_ != o.arity_ || !ctx_->same_as(*o.ctx_)) return false;
    return rows_ == o.rows_;
}

SparseOp SparseOp::embed_two_site(size_t i, size_t j, size_t n) const {
    if (arity_ != 2) throw std::invalid_argument("SparseOp: embed_two_site needs an arity-2 operator");
    if (!(1 <= i && i < j && j <= n)) throw std::out_of_range("SparseOp: embedding positions out of range");
    SparseOp out(dim_, n, ctx_);
    uint64_t rest_count = pow_u64(dim_, n - 2);
    for (const auto& [rf, row] : rows_) {
        auto rpair = unflatten(rf, dim_, 2);
        for (const auto& [cf, v] : row) {
            auto cpair = unflatten(cf, dim_, 2);
            for (uint64_t rest = 0; rest < rest_count; ++rest) {
                auto digits = unflatten(rest, dim_, n - 2);
                std::vector<int> rid(n), cid(n);
                size_t next = 0;
                for (size_t p = 1; p <= n; ++p) {
                    if (p == i) {
                        rid[p - 1] = rpair[0];
                        cid[p - 1] = cpair[0];
                    } else if (p == j) {
                        rid[p - 1] = rpair[1];
                        cid[p - 1] = cpair[1];
                    } else {
                        rid[p - 1] = cid[p - 1] = digits[next++];
                    }
                }
                out.rows_[flatten(rid, dim_)][flatten(cid, dim_)] = v;
            }
        }
    }
    return out;
}

SparseOp SparseOp::partial_trace(size_t i) const {
    if (i < 1 || i > arity_) throw std::out_of_range("SparseOp: trace position out of range");
    if (arity_ == 1) throw std::invalid_argument("SparseOp: cannot partial-trace an arity-1 operator to arity 0");
    SparseOp out(dim_, arity_ - 1, ctx_);
    for (const auto& [rf, row] : rows_) {
        auto rid = unflatten(rf, dim_, arity_);
        for (const auto& [cf, v] : row) {
            auto cid = unflatten(cf, dim_, arity_);
            if (rid[i - 1] != cid[i - 1]) continue;
            std::vector<int> rout(rid), cout(cid);
            rout.erase(rout.begin() + (i - 1));
            cout.erase(cout.begin() + (i - 1));
            uint64_t r2 = flatten(rout, dim_), c2 = flatten(cout, dim_);
            out.set_flat(r2, c2, out.at_flat(r2, c2) + v);
        }
    }
    return out;
}

MultiLaurent SparseOp::trace() const {
    MultiLaurent tr(ctx_);
    for (const auto& [r, row] : rows_) {
        auto it = row.find(r);
        if (it != row.end()) tr += it->second;
    }
    return tr;
}

SparseOp SparseOp::rot_left() const {
    if (arity_ != 2) throw std::invalid_argument("SparseOp: rotation needs an arity-2 operator");
    SparseOp out(dim_, 2, ctx_);
    for (const auto& [rf, row] : rows_) {
        auto kl = unflatten(rf, dim_, 2);
        for (const auto& [cf, v] : row) {
            auto ij = unflatten(cf, dim_, 2);
            out.set({kl[1], ij[1]}, {kl[0], ij[0]}, v);
        }
    }
    return out;
}

SparseOp SparseOp::rot_right() const {
    if (arity_ != 2) throw std::invalid_argument("SparseOp: rotation needs an arity-2 operator");
    SparseOp out(dim_, 2, ctx_);
    for (const auto& [rf, row] : rows_) {
        auto kl = unflatten(rf, dim_, 2);
        for (const auto& [cf, v] : row) {
            auto ij = unflatten(cf, dim_, 2);
            out.set({ij[0], kl[0]}, {ij[1], kl[1]}, v);
        }
    }
    return out;
}

std::optional<MultiLaurent> SparseOp::as_scalar_multiple_of_identity() const {
    MultiLaurent lambda(ctx_);
    bool have = false;
    for (const auto& [r, row] : rows_)
        for (const auto& [c, v] : row) {
            if (r != c) return std::nullopt;
            if (!have) {
                lambda = v;
                have = true;
            } else if (v != lambda) {
                return std::nullopt;
            }
        }
    if (!have) return MultiLaurent(ctx_); // zero operator = 0 · id
    // every diagonal slot must carry the common value
    for (uint64_t k = 0; k < flat_dim_; ++k) {
        auto it = rows_.find(k);
        if (it == rows_.end() || !it->second.count(k)) return std::nullopt;
    }
    return lambda;
}

namespace {

// Union-find over flat indices, for splitting a matrix into the connected
// blocks of its support (the finest block-diagonal structure it has).
struct UnionFind {
    std::vector<uint64_t> parent;
    explicit UnionFind(uint64_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    uint64_t find(uint64_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(uint64_t a, uint64_t b) { parent[find(a)] = find(b); }
};

} // namespace

SparseOp SparseOp::invert() const {
    SparseOp out(dim_, arity_, ctx_);
    UnionFind uf(flat_dim_);
    for (const auto& [r, row] : rows_)
        for (const auto& [c, v] : row) uf.unite(r, c);

    std::map<uint64_t, std::vector<uint64_t>> blocks;
    for (uint64_t k = 0; k < flat_dim_; ++k) blocks[uf.find(k)].push_back(k);

    for (const auto& [root, members] : blocks) {
        // Fast path: one entry per row, each a single term — a scaled
        // permutation block inverts entrywise.
        bool perm = true;
        std::map<uint64_t, uint64_t> col_of_row;
        for (uint64_t r : members) {
            auto it = rows_.find(r);
            if (it == rows_.end() || it->second.size() != 1 || it->second.begin()->second.term_count() != 1) {
                perm = false;
                break;
            }
            col_of_row[r] = it->second.begin()->first;
        }
        if (perm) {
            std::map<uint64_t, uint64_t> seen;
            for (auto& [r, c] : col_of_row) {
                if (seen.count(c)) throw std::domain_error("SparseOp: singular matrix");
                seen[c] = r;
            }
            for (auto& [r, c] : col_of_row) out.rows_[c][r] = rows_.at(r).at(c).monomial_inverse();
            continue;
        }

        // General path: Gauss–Jordan over the fraction field on the block.
        size_t k = members.size();
        std::map<uint64_t, size_t> pos;
        for (size_t p = 0; p < k; ++p) pos[members[p]] = p;
        RationalFn zero = RationalFn::zero(ctx_), one = RationalFn::one(ctx_);
        std::vector<std::vector<RationalFn>> m(k, std::vector<RationalFn>(2 * k, zero));
        for (uint64_t r : members) {
            auto it = rows_.find(r);
            if (it == rows_.end()) throw std::domain_error("SparseOp: singular matrix");
            for (const auto& [c, v] : it->second) m[pos[r]][pos[c]] = RationalFn(v);
        }
        for (size_t p = 0; p < k; ++p) m[p][k + p] = one;

        for (size_t col = 0; col < k; ++col) {
            size_t best = k;
            size_t best_terms = SIZE_MAX;
            for (size_t r = col; r < k; ++r) {
                if (m[r][col].is_zero()) continue;
                size_t terms = m[r][col].num().term_count() + m[r][col].den().term_count();
                if (terms < best_terms) {
                    best = r;
                    best_terms = terms;
                }
            }
            if (best == k) throw std::domain_error("SparseOp: singular matrix");
            std::swap(m[col], m[best]);
            RationalFn inv = m[col][col].inverse();
            for (size_t c = col; c < 2 * k; ++c)
                if (!m[col][c].is_zero()) m[col][c] = m[col][c] * inv;
            for (size_t r = 0; r < k; ++r) {
                if (r == col || m[r][col].is_zero()) continue;
                RationalFn f = m[r][col];
                for (size_t c = col; c < 2 * k; ++c)
                    if (!m[col][c].is_zero()) m[r][c] = m[r][c] - f * m[col][c];
            }
        }

        for (size_t r = 0; r < k; ++r)
            for (size_t c = 0; c < k; ++c)
                if (!m[r][k + c].is_zero()) out.rows_[members[r]][members[c]] = m[r][k + c].to_laurent();
    }
    return out;
}

SparseOp SparseOp::substitute(const std::map<std::string, MultiLaurent>& images, CtxPtr target) const {
    SparseOp out(dim_, arity_, target);
    for (const auto& [r, row] : rows_)
        for (const auto& [c, v] : row) out.set_flat(r, c, v.substitute(images, target));
    return out;
}

SparseOp SparseOp::promote(CtxPtr target) const {
    SparseOp out(dim_, arity_, target);
    for (const auto& [r, row] : rows_)
        for (const auto& [c, v] : row) out.rows_[r][c] = v.promote(target);
    return out;
}

std::string SparseOp::to_json() const {
    nlohmann::json j;
    j["dim"] = dim_;
    j["arity"] = arity_;
    j["entries"] = nlohmann::json::array();
    for (const auto& [r, row] : rows_)
        for (const auto& [c, v] : row)
            j["entries"].push_back({{"row", unflatten(r, dim_, arity_)},
                                    {"col", unflatten(c, dim_, arity_)},
                                    {"value", nlohmann::json::parse(v.to_json())}});
    return j.dump();
}

SparseOp SparseOp::from_json(CtxPtr ctx, const std::string& json) {
    nlohmann::json j = nlohmann::json::parse(json);
    SparseOp op(j.at("dim").get<size_t>(), j.at("arity").get<size_t>(), ctx);
    for (const auto& je : j.at("entries")) {
        auto row = je.at("row").get<std::vector<int>>();
        auto col = je.at("col").get<std::vector<int>>();
        op.set(row, col, MultiLaurent::from_json(ctx, je.at("value").dump()));
    }
    return op;
}

std::string SparseOp::str() const {
    std::string out = "SparseOp dim=" + std::to_string(dim_) + " arity=" + std::to_string(arity_) + "\n";
    for (const auto& [r, row] : rows_)
        for (const auto& [c, v] : row) {
            auto rid = unflatten(r, dim_, arity_), cid = unflatten(c, dim_, arity_);
            out += "  (";
            for (size_t k = 0; k < rid.size(); ++k) out += (k ? "," : "") + std::to_string(rid[k]);
            out += ") <- (";
            for (size_t k = 0; k < cid.size(); ++k) out += (k ? "," : "") + std::to_string(cid[k]);
            out += "): " + v.str() + "\n";
        }
    return out;
}

} // namespace knotpoly
