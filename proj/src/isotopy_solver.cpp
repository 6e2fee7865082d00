#include "knotpoly/isotopy_solver.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace knotpoly {

namespace {

constexpr size_t kNoCol = static_cast<size_t>(-1);

std::string index_str(uint64_t flat, size_t dim, size_t arity) {
    std::vector<int> idx = SparseOp::unflatten(flat, dim, arity);
    std::string out;
    for (size_t i = 0; i < idx.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(idx[i]);
    }
    return out;
}

// Divides out the common monomial factor and the common rational content of
// all coefficients in a row, then fixes the sign so the leading coefficient
// of the lowest unknown is positive (real part first).  Keeps elimination
// intermediates small and makes equal-up-to-scalar rows identical.
void normalize_row(std::map<size_t, MultiLaurent>& row, const CtxPtr& ctx) {
    for (auto it = row.begin(); it != row.end();) {
        if (it->second.is_zero()) it = row.erase(it);
        else ++it;
    }
    if (row.empty()) return;

    size_t nvars = ctx->size();
    std::vector<int> mins(nvars, 0);
    bool first = true;
    mpz_class num_gcd = 0;
    mpz_class den_lcm = 1;
    for (const auto& [slot, poly] : row) {
        for (const auto& [exps, c] : poly.term_list()) {
            for (size_t i = 0; i < nvars; ++i) {
                if (first || exps[i] < mins[i]) mins[i] = exps[i];
            }
            first = false;
            if (sgn(c.re) != 0) {
                num_gcd = gcd(num_gcd, c.re.get_num());
                den_lcm = lcm(den_lcm, c.re.get_den());
            }
            if (sgn(c.im) != 0) {
                num_gcd = gcd(num_gcd, c.im.get_num());
                den_lcm = lcm(den_lcm, c.im.get_den());
            }
        }
    }

    bool shift = false;
    for (size_t i = 0; i < nvars; ++i) shift = shift || mins[i] != 0;
    GaussRational scale(mpq_class(den_lcm, num_gcd));
    bool rescale = !(num_gcd == 1 && den_lcm == 1);
    if (shift || rescale) {
        std::vector<int> neg(nvars);
        for (size_t i = 0; i < nvars; ++i) neg[i] = -mins[i];
        MultiLaurent factor = MultiLaurent::monomial(ctx, rescale ? scale : GaussRational(1), neg);
        for (auto& [slot, poly] : row) poly = poly * factor;
    }

    const GaussRational& lead = row.begin()->second.term_list().front().second;
    if (sgn(lead.re) < 0 || (sgn(lead.re) == 0 && sgn(lead.im) < 0)) {
        for (auto& [slot, poly] : row) poly = -poly;
    }
}

std::string serialize_row(const std::map<size_t, MultiLaurent>& row) {
    std::string s;
    for (const auto& [slot, poly] : row) {
        s += std::to_string(slot);
        s += ":";
        s += poly.str();
        s += ";";
    }
    return s;
}

// Inter-reduced fraction-free row echelon: every pivot column appears in
// exactly one stored row, so reduction of an incoming row never cascades and
// back-substitution reads coefficients off directly.
struct Echelon {
    CtxPtr ctx;
    std::vector<std::map<size_t, MultiLaurent>> rows;
    std::vector<size_t> pivot_of_row;
    std::map<size_t, size_t> row_of_col;
    bool forced_preferred = false;

    // row := prow[c]*row - row[c]*prow, which zeroes column c exactly.
    void eliminate(std::map<size_t, MultiLaurent>& row,
                   const std::map<size_t, MultiLaurent>& prow, size_t c) const {
        MultiLaurent p = prow.at(c);
        MultiLaurent a = row.at(c);
        for (auto& [col, v] : row) v = v * p;
        for (const auto& [col, v] : prow) {
            auto it = row.find(col);
            if (it == row.end()) it = row.emplace(col, MultiLaurent(ctx)).first;
            it->second -= a * v;
        }
        normalize_row(row, ctx);
    }

    void reduce(std::map<size_t, MultiLaurent>& row) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [c, v] : row) {
                auto it = row_of_col.find(c);
                if (it != row_of_col.end()) {
                    eliminate(row, rows[it->second], c);
                    changed = true;
                    break;
                }
            }
        }
    }

    void insert(std::map<size_t, MultiLaurent> row, const std::set<size_t>& avoid) {
        size_t best = kNoCol;
        bool best_avoided = true;
        size_t best_terms = static_cast<size_t>(-1);
        for (const auto& [c, v] : row) {
            bool av = avoid.count(c) > 0;
            size_t tc = v.term_count();
            bool better = best == kNoCol || (!av && best_avoided) ||
                          (av == best_avoided && tc < best_terms);
            if (better) {
                best = c;
                best_avoided = av;
                best_terms = tc;
            }
        }
        if (best_avoided) forced_preferred = true;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].count(best)) eliminate(rows[i], row, best);
        }
        pivot_of_row.push_back(best);
        row_of_col[best] = rows.size();
        rows.push_back(std::move(row));
    }

    void consume(const LinearSystem& sys, const std::set<size_t>& avoid) {
        ctx = sys.ctx;
        for (const auto& r : sys.rows) {
            std::map<size_t, MultiLaurent> row = r;
            normalize_row(row, ctx);
            reduce(row);
            if (!row.empty()) insert(std::move(row), avoid);
        }
    }
};

std::vector<GaussRational> sample_point(const CtxPtr& ctx, std::mt19937_64& rng) {
    size_t n = ctx->size();
    std::vector<GaussRational> pt;
    std::set<std::string> used;
    while (pt.size() < n) {
        long num = 2 + static_cast<long>(rng() % 39);
        long den = 1 + static_cast<long>(rng() % 7);
        mpq_class q(num, den);
        q.canonicalize();
        if (q == 1) continue;
        std::string key = q.get_str();
        if (!used.insert(key).second) continue;
        pt.push_back(GaussRational(q));
    }
    return pt;
}

size_t numeric_rank(const LinearSystem& sys, const std::vector<GaussRational>& pt) {
    // Plain sparse echelon over the exact scalar field.
    std::map<size_t, std::map<size_t, GaussRational>> pivots;
    for (const auto& sym_row : sys.rows) {
        std::map<size_t, GaussRational> row;
        for (const auto& [slot, poly] : sym_row) {
            GaussRational v = poly.eval(pt);
            if (!v.is_zero()) row[slot] = v;
        }
        while (!row.empty()) {
            size_t c = row.begin()->first;
            GaussRational lead = row.begin()->second;
            auto it = pivots.find(c);
            if (it == pivots.end()) {
                for (auto& [col, v] : row) v = v / lead;
                pivots.emplace(c, std::move(row));
                break;
            }
            for (const auto& [col, v] : it->second) {
                GaussRational delta = lead * v;
                auto jt = row.find(col);
                if (jt == row.end()) {
                    if (!delta.is_zero()) row[col] = -delta;
                } else {
                    jt->second -= delta;
                    if (jt->second.is_zero()) row.erase(jt);
                }
            }
        }
    }
    return pivots.size();
}

RankReport probe_rank(const LinearSystem& sys, size_t matrix_rank, uint64_t seed) {
    RankReport rep;
    rep.unknowns = sys.unknowns;
    rep.matrix_rank = matrix_rank;
    rep.solution_dim = sys.unknowns - matrix_rank;
    rep.probe_points = 3;
    std::mt19937_64 rng(seed ^ 0x1507f3258d5a21ull);
    size_t agreed = 0;
    for (size_t p = 0; p < rep.probe_points; ++p) {
        for (int attempt = 0; attempt < 8; ++attempt) {
            size_t nr = numeric_rank(sys, sample_point(sys.ctx, rng));
            if (nr > matrix_rank) {
                throw std::logic_error("numeric rank exceeds symbolic rank");
            }
            if (nr == matrix_rank) {
                ++agreed;
                break;
            }
            // The random point specialized into a rank drop; resample.
        }
    }
    rep.probes_agree = agreed == rep.probe_points;
    return rep;
}

ParametricSolution extract_solution(const LinearSystem& sys, const Echelon& ech,
                                    const std::vector<size_t>& preferred_free) {
    ParametricSolution sol;
    sol.unknowns = sys.unknowns;
    std::set<size_t> pivot_cols(ech.pivot_of_row.begin(), ech.pivot_of_row.end());
    for (size_t c = 0; c < sys.unknowns; ++c) {
        if (!pivot_cols.count(c)) sol.free_slots.push_back(c);
    }
    std::map<size_t, size_t> free_index;
    for (size_t k = 0; k < sol.free_slots.size(); ++k) free_index[sol.free_slots[k]] = k;

    sol.coeff.assign(sys.unknowns,
                     std::vector<RationalFn>(sol.free_slots.size(), RationalFn::zero(sys.ctx)));
    for (size_t k = 0; k < sol.free_slots.size(); ++k) {
        sol.coeff[sol.free_slots[k]][k] = RationalFn::one(sys.ctx);
    }
    for (size_t i = 0; i < ech.rows.size(); ++i) {
        size_t c = ech.pivot_of_row[i];
        const MultiLaurent& p = ech.rows[i].at(c);
        for (const auto& [col, v] : ech.rows[i]) {
            if (col == c) continue;
            sol.coeff[c][free_index.at(col)] = RationalFn(-v, p);
        }
    }

    if (!preferred_free.empty()) {
        std::set<size_t> want(preferred_free.begin(), preferred_free.end());
        std::set<size_t> got(sol.free_slots.begin(), sol.free_slots.end());
        sol.preferred_free_respected = want == got;
    }
    return sol;
}

SparseOp matrix_unit(size_t dim, size_t arity, const CtxPtr& ctx, uint64_t r, uint64_t c) {
    SparseOp out(dim, arity, ctx);
    out.set_flat(r, c, MultiLaurent::constant(ctx, GaussRational(1)));
    return out;
}

using RowAccumulator = std::map<std::pair<uint64_t, uint64_t>, std::map<size_t, MultiLaurent>>;

void scatter(const SparseOp& M, size_t slot, RowAccumulator& acc) {
    M.for_each([&](uint64_t u, uint64_t v, const MultiLaurent& val) {
        auto& row = acc[{u, v}];
        auto it = row.find(slot);
        if (it == row.end()) {
            row.emplace(slot, val);
        } else {
            it->second += val;
        }
    });
}

void check_ansatz(const EnhancedRMatrix& E, const GradedAnsatz& a, size_t arity) {
    if (a.arity != arity) {
        throw std::invalid_argument("ansatz arity must be " + std::to_string(arity));
    }
    if (a.dim != E.dim) throw std::invalid_argument("ansatz dimension does not match matrix");
}

} // namespace

long GradedAnsatz::slot_of(uint64_t row, uint64_t col) const {
    std::pair<uint64_t, uint64_t> key{row, col};
    auto it = std::lower_bound(positions.begin(), positions.end(), key);
    if (it == positions.end() || *it != key) return -1;
    return static_cast<long>(it - positions.begin());
}

std::string GradedAnsatz::param_name(size_t slot) const {
    const auto& [r, c] = positions.at(slot);
    return "x(" + index_str(r, dim, arity) + "|" + index_str(c, dim, arity) + ")";
}

std::string GradedAnsatz::str() const {
    std::ostringstream os;
    os << "ansatz: dim=" << dim << " arity=" << arity << " unknowns=" << positions.size();
    return os.str();
}

GradedAnsatz graded_ansatz(const EnhancedRMatrix& E, size_t arity) {
    if (arity < 1) throw std::invalid_argument("ansatz arity must be at least 1");
    if (E.gradings.empty()) {
        throw std::invalid_argument("matrix carries no gradings to shape an ansatz");
    }
    GradedAnsatz a;
    a.dim = E.dim;
    a.arity = arity;
    uint64_t flat = 1;
    for (size_t i = 0; i < arity; ++i) flat *= E.dim;

    std::vector<std::vector<std::vector<long>>> totals(E.gradings.size());
    for (size_t g = 0; g < E.gradings.size(); ++g) {
        totals[g].reserve(flat);
        for (uint64_t r = 0; r < flat; ++r) {
            totals[g].push_back(E.gradings[g].total(SparseOp::unflatten(r, E.dim, arity)));
        }
    }
    for (uint64_t r = 0; r < flat; ++r) {
        for (uint64_t c = 0; c < flat; ++c) {
            bool ok = true;
            for (size_t g = 0; ok && g < E.gradings.size(); ++g) {
                ok = totals[g][r] == totals[g][c];
            }
            if (ok) a.positions.emplace_back(r, c);
        }
    }
    return a;
}

void LinearSystem::add_row(std::map<size_t, MultiLaurent> row) {
    normalize_row(row, ctx);
    if (row.empty()) return;
    if (!seen_.insert(serialize_row(row)).second) return;
    rows.push_back(std::move(row));
}

std::string LinearSystem::str() const {
    std::ostringstream os;
    os << "system: unknowns=" << unknowns << " rows=" << rows.size();
    return os.str();
}

LinearSystem build_slide_system(const EnhancedRMatrix& E, const GradedAnsatz& a) {
    check_ansatz(E, a, 1);
    LinearSystem sys;
    sys.ctx = E.ctx;
    sys.unknowns = a.size();
    SparseOp id1 = SparseOp::identity(E.dim, 1, E.ctx);
    RowAccumulator acc;
    for (size_t s = 0; s < a.size(); ++s) {
        SparseOp Es = matrix_unit(E.dim, 1, E.ctx, a.positions[s].first, a.positions[s].second);
        SparseOp M = id1.tensor(Es).compose(E.R) - E.R.compose(Es.tensor(id1));
        scatter(M, s, acc);
    }
    for (auto& [key, row] : acc) sys.add_row(std::move(row));
    return sys;
}

LinearSystem build_pair_system(const EnhancedRMatrix& E, const GradedAnsatz& a) {
    check_ansatz(E, a, 2);
    LinearSystem sys;
    sys.ctx = E.ctx;
    sys.unknowns = a.size();
    SparseOp id1 = SparseOp::identity(E.dim, 1, E.ctx);
    SparseOp R2 = E.R.compose(E.R);
    SparseOp A = E.R.tensor(id1).compose(id1.tensor(E.R));
    RowAccumulator twist_acc, slide_acc;
    for (size_t s = 0; s < a.size(); ++s) {
        SparseOp Es = matrix_unit(E.dim, 2, E.ctx, a.positions[s].first, a.positions[s].second);
        scatter(R2.compose(Es) - Es.compose(R2), s, twist_acc);
        scatter(A.compose(Es.tensor(id1)) - id1.tensor(Es).compose(A), s, slide_acc);
    }
    for (auto& [key, row] : twist_acc) sys.add_row(std::move(row));
    for (auto& [key, row] : slide_acc) sys.add_row(std::move(row));
    return sys;
}

std::string RankReport::str() const {
    std::ostringstream os;
    os << "unknowns=" << unknowns << " matrix_rank=" << matrix_rank
       << " free_parameters=" << solution_dim << " probes="
       << (probes_agree ? "agree" : "DISAGREE") << " (" << probe_points << " points)";
    return os.str();
}

RankReport rank(const LinearSystem& sys, uint64_t seed) {
    Echelon ech;
    ech.consume(sys, {});
    return probe_rank(sys, ech.rows.size(), seed);
}

ParametricSolution solve_system(const LinearSystem& sys,
                                const std::vector<size_t>& preferred_free) {
    Echelon ech;
    ech.consume(sys, std::set<size_t>(preferred_free.begin(), preferred_free.end()));
    return extract_solution(sys, ech, preferred_free);
}

std::string ParametricSolution::relations_str(const GradedAnsatz& a) const {
    std::set<size_t> free_set(free_slots.begin(), free_slots.end());
    std::ostringstream os;
    for (size_t u = 0; u < unknowns; ++u) {
        if (free_set.count(u)) continue;
        os << a.param_name(u) << " =";
        bool any = false;
        for (size_t k = 0; k < free_slots.size(); ++k) {
            if (coeff[u][k].is_zero()) continue;
            os << (any ? " + " : " ") << "[" << coeff[u][k].str() << "]*"
               << a.param_name(free_slots[k]);
            any = true;
        }
        if (!any) os << " 0";
        os << "\n";
    }
    return os.str();
}

ClosurePair closure_pair(
    const EnhancedRMatrix& E,
    const std::vector<std::pair<std::pair<uint64_t, uint64_t>, RationalFn>>& entries) {
    size_t d = E.dim;
    SparseOp hinv = E.h.invert();
    ClosurePair cp;
    cp.left.assign(d * d, RationalFn::zero(E.ctx));
    cp.right.assign(d * d, RationalFn::zero(E.ctx));
    for (const auto& [pos, value] : entries) {
        if (value.is_zero()) continue;
        uint64_t a1 = pos.first / d, a2 = pos.first % d;
        uint64_t b1 = pos.second / d, b2 = pos.second % d;
        MultiLaurent hval = E.h.at_flat(b2, a2);
        if (!hval.is_zero()) {
            size_t e = a1 * d + b1;
            cp.left[e] = cp.left[e] + RationalFn(hval) * value;
        }
        MultiLaurent hival = hinv.at_flat(b1, a1);
        if (!hival.is_zero()) {
            size_t e = a2 * d + b2;
            cp.right[e] = cp.right[e] + value * RationalFn(hival);
        }
    }
    return cp;
}

std::string ClosureReport::str() const {
    std::ostringstream os;
    os << "closures: " << (equal ? "left == right" : "left != right") << " across "
       << free_count << " free parameter(s)";
    return os.str();
}

ClosureReport check_closures(const EnhancedRMatrix& E, const GradedAnsatz& a,
                             const ParametricSolution& sol) {
    check_ansatz(E, a, 2);
    if (!E.has_enhancement) {
        throw std::invalid_argument("matrix has no valid closure operator");
    }
    if (sol.unknowns != a.size()) {
        throw std::invalid_argument("solution does not belong to this ansatz");
    }
    ClosureReport rep;
    rep.free_count = sol.free_count();
    rep.equal = true;
    for (size_t k = 0; k < rep.free_count; ++k) {
        std::vector<std::pair<std::pair<uint64_t, uint64_t>, RationalFn>> entries;
        for (size_t u = 0; u < sol.unknowns; ++u) {
            if (!sol.coeff[u][k].is_zero()) entries.emplace_back(a.positions[u], sol.coeff[u][k]);
        }
        ClosurePair cp = closure_pair(E, entries);
        for (size_t e = 0; e < cp.left.size(); ++e) {
            if (cp.left[e] != cp.right[e]) rep.equal = false;
        }
        rep.left.push_back(std::move(cp.left));
        rep.right.push_back(std::move(cp.right));
    }
    return rep;
}

bool in_solution_space(const LinearSystem& sys, const GradedAnsatz& a, const SparseOp& F) {
    if (F.arity() != a.arity || F.dim() != a.dim) {
        throw std::invalid_argument("operator shape does not match the ansatz");
    }
    std::vector<MultiLaurent> values(a.size(), MultiLaurent(sys.ctx));
    bool supported = true;
    F.for_each([&](uint64_t r, uint64_t c, const MultiLaurent& v) {
        long s = a.slot_of(r, c);
        if (s < 0) {
            supported = false;
        } else {
            values[static_cast<size_t>(s)] = v;
        }
    });
    if (!supported) return false;
    for (const auto& row : sys.rows) {
        MultiLaurent total(sys.ctx);
        for (const auto& [slot, coeff] : row) total += coeff * values[slot];
        if (!total.is_zero()) return false;
    }
    return true;
}

std::string OneFactorAnalysis::str() const {
    std::ostringstream os;
    os << ansatz.str() << "\n"
       << "rank: " << rank.str() << "\n"
       << "solution: " << (scalar_only ? "scalar multiples of the identity" : "NOT scalar-only")
       << "\n";
    return os.str();
}

OneFactorAnalysis analyze_one_factor(const EnhancedRMatrix& E, uint64_t seed) {
    OneFactorAnalysis out;
    out.ansatz = graded_ansatz(E, 1);
    LinearSystem sys = build_slide_system(E, out.ansatz);
    Echelon ech;
    ech.consume(sys, {});
    out.rank = probe_rank(sys, ech.rows.size(), seed);
    out.solution = extract_solution(sys, ech, {});
    out.scalar_only = out.rank.solution_dim == 1;
    if (out.scalar_only) {
        RationalFn one = RationalFn::one(E.ctx);
        RationalFn zero = RationalFn::zero(E.ctx);
        for (size_t u = 0; u < out.solution.unknowns; ++u) {
            const auto& [r, c] = out.ansatz.positions[u];
            if (out.solution.coeff[u][0] != (r == c ? one : zero)) out.scalar_only = false;
        }
    }
    return out;
}

std::string TwoFactorAnalysis::str() const {
    std::ostringstream os;
    os << ansatz.str() << "\n"
       << "rank: " << rank.str() << "\n"
       << "preferred free respected: " << (solution.preferred_free_respected ? "yes" : "no")
       << "\n"
       << closures.str() << "\n";
    return os.str();
}

TwoFactorAnalysis analyze_two_factor(const EnhancedRMatrix& E,
                                     const std::vector<size_t>& preferred_free, uint64_t seed) {
    TwoFactorAnalysis out;
    out.ansatz = graded_ansatz(E, 2);
    LinearSystem sys = build_pair_system(E, out.ansatz);
    Echelon ech;
    ech.consume(sys, std::set<size_t>(preferred_free.begin(), preferred_free.end()));
    out.rank = probe_rank(sys, ech.rows.size(), seed);
    out.solution = extract_solution(sys, ech, preferred_free);
    out.closures = check_closures(E, out.ansatz, out.solution);
    return out;
}

} // namespace knotpoly
