#include "knotpoly/enhanced_rmatrix.hpp"

#include "knotpoly/rational_fn.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <utility>

namespace knotpoly {

std::vector<long> Grading::total(const std::vector<int>& idx) const {
    if (weights.empty()) return {};
    std::vector<long> sum(weights.front().size(), 0);
    for (int i : idx) {
        const auto& w = weights.at(static_cast<size_t>(i) - 1);
        for (size_t k = 0; k < sum.size(); ++k) sum[k] += w[k];
    }
    return sum;
}

bool AxiomReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

const AxiomCheck* AxiomReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string AxiomReport::str() const {
    std::ostringstream out;
    for (const auto& c : checks) {
        out << (c.pass ? "pass" : "FAIL") << "  " << c.name;
        if (!c.pass && c.residual)
            out << "  (" << c.residual->entry_count() << " residual entries)";
        out << "\n";
    }
    return out.str();
}

std::string AxiomReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json item;
        item["name"] = c.name;
        item["pass"] = c.pass;
        if (!c.pass && c.residual)
            item["residual"] = nlohmann::json::parse(c.residual->to_json());
        arr.push_back(std::move(item));
    }
    return arr.dump();
}

namespace {

AxiomCheck make_check(const std::string& name, const SparseOp& residual) {
    AxiomCheck c;
    c.name = name;
    c.pass = residual.is_zero();
    if (!c.pass) c.residual = residual;
    return c;
}

}  // namespace

AxiomReport check_axioms(const EnhancedRMatrix& E) {
    const SparseOp& R = E.R;
    const SparseOp& Ri = E.R_inv;
    const SparseOp& h = E.h;
    const SparseOp id1 = SparseOp::identity(E.dim, 1, E.ctx);
    const SparseOp id2 = SparseOp::identity(E.dim, 2, E.ctx);

    AxiomReport rep;

    {
        SparseOp r1 = R.compose(Ri) - id2;
        SparseOp r2 = Ri.compose(R) - id2;
        AxiomCheck c;
        c.name = "inverse";
        c.pass = r1.is_zero() && r2.is_zero();
        if (!c.pass) c.residual = r1.is_zero() ? r2 : r1;
        rep.checks.push_back(std::move(c));
    }

    const SparseOp hh = h.tensor(h);
    rep.checks.push_back(make_check("h-commutation", R.compose(hh) - hh.compose(R)));

    const SparseOp id_h = id1.tensor(h);
    rep.checks.push_back(
        make_check("right-partial-trace", id_h.compose(R).partial_trace(2) - id1));
    rep.checks.push_back(make_check("right-partial-trace-inverse",
                                    id_h.compose(Ri).partial_trace(2) - id1));

    {
        const SparseOp h_inv_id = h.invert().tensor(id1);
        const SparseOp twisted = id_h.compose(R).compose(h_inv_id);
        const SparseOp composite = Ri.rot_left().compose(twisted.rot_right());
        rep.checks.push_back(make_check("duality", composite - id2));
    }

    {
        const SparseOp R12 = R.embed_two_site(1, 2, 3);
        const SparseOp R23 = R.embed_two_site(2, 3, 3);
        rep.checks.push_back(make_check(
            "yang-baxter",
            R12.compose(R23).compose(R12) - R23.compose(R12).compose(R23)));
    }

    return rep;
}

bool check_grading_preserved(const EnhancedRMatrix& E, const Grading& g) {
    auto preserved = [&](const SparseOp& A) {
        bool ok = true;
        A.for_each([&](uint64_t r, uint64_t c, const MultiLaurent&) {
            if (!ok) return;
            const auto ri = SparseOp::unflatten(r, A.dim(), A.arity());
            const auto ci = SparseOp::unflatten(c, A.dim(), A.arity());
            if (g.total(ri) != g.total(ci)) ok = false;
        });
        return ok;
    };
    return preserved(E.R) && preserved(E.R_inv);
}

std::vector<DiagonalEnhancementCandidate> solve_diagonal_enhancement(
    const SparseOp& R, const SparseOp& R_inv) {
    if (R.arity() != 2)
        throw std::invalid_argument(
            "solve_diagonal_enhancement: arity-2 operator required");
    const size_t d = R.dim();
    const CtxPtr ctx = R.ctx();
    const RationalFn rzero = RationalFn::zero(ctx);
    const RationalFn rone = RationalFn::one(ctx);

    // Trace condition on a diagonal h, for M ∈ {R, R_inv}:
    //   for all outputs k and inputs i:  Σ_l M[(k,l),(i,l)]·h_l = δ_{ki}.
    std::vector<std::vector<RationalFn>> rows;
    std::vector<RationalFn> rhs;
    auto add_equations = [&](const SparseOp& M) {
        for (size_t k = 1; k <= d; ++k) {
            for (size_t i = 1; i <= d; ++i) {
                std::vector<RationalFn> row(d, rzero);
                bool nonzero = false;
                for (size_t l = 1; l <= d; ++l) {
                    MultiLaurent e = M.at({static_cast<int>(k), static_cast<int>(l)},
                                          {static_cast<int>(i), static_cast<int>(l)});
                    if (!e.is_zero()) {
                        row[l - 1] = RationalFn(std::move(e));
                        nonzero = true;
                    }
                }
                if (nonzero || k == i) {
                    rows.push_back(std::move(row));
                    rhs.push_back(k == i ? rone : rzero);
                }
            }
        }
    };
    add_equations(R);
    add_equations(R_inv);

    // Gauss–Jordan elimination over the fraction field, pivoting on the entry
    // with the fewest terms to keep intermediate expressions small.
    std::vector<int> pivot_col_of_row;
    std::vector<bool> is_pivot_col(d, false);
    size_t rank = 0;
    for (size_t col = 0; col < d && rank < rows.size(); ++col) {
        size_t best = rows.size();
        size_t best_terms = 0;
        for (size_t r = rank; r < rows.size(); ++r) {
            if (rows[r][col].is_zero()) continue;
            size_t terms =
                rows[r][col].num().term_count() + rows[r][col].den().term_count();
            if (best == rows.size() || terms < best_terms) {
                best = r;
                best_terms = terms;
            }
        }
        if (best == rows.size()) continue;
        std::swap(rows[rank], rows[best]);
        std::swap(rhs[rank], rhs[best]);
        const RationalFn inv = rows[rank][col].inverse();
        for (size_t c = 0; c < d; ++c) rows[rank][c] = rows[rank][c] * inv;
        rhs[rank] = rhs[rank] * inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            const RationalFn f = rows[r][col];
            for (size_t c = 0; c < d; ++c)
                rows[r][c] = rows[r][c] - f * rows[rank][c];
            rhs[r] = rhs[r] - f * rhs[rank];
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        is_pivot_col[col] = true;
        ++rank;
    }
    for (size_t r = rank; r < rows.size(); ++r)
        if (!rhs[r].is_zero()) return {};  // inconsistent

    // Representative solution: free coordinates set to 1.
    std::vector<RationalFn> sol(d, rone);
    for (size_t r = 0; r < rank; ++r) {
        RationalFn v = rhs[r];
        for (size_t c = 0; c < d; ++c) {
            if (is_pivot_col[c] || rows[r][c].is_zero()) continue;
            v = v - rows[r][c];  // free coordinate value is 1
        }
        sol[static_cast<size_t>(pivot_col_of_row[r])] = v;
    }

    DiagonalEnhancementCandidate cand;
    cand.solution_dim = static_cast<long>(d - rank);
    cand.diag.reserve(d);
    for (const RationalFn& v : sol) {
        if (v.is_zero()) return {};  // representative not invertible
        try {
            cand.diag.push_back(v.to_laurent());
        } catch (const std::domain_error&) {
            return {};  // no Laurent-entry diagonal in this solution set
        }
    }

    EnhancedRMatrix probe;
    probe.name = "diagonal-candidate";
    probe.dim = d;
    probe.ctx = ctx;
    probe.R = R;
    probe.R_inv = R_inv;
    probe.h = SparseOp::diagonal(ctx, cand.diag);
    cand.report = check_axioms(probe);
    cand.accepted = cand.report.all_pass();

    std::vector<DiagonalEnhancementCandidate> out;
    out.push_back(std::move(cand));
    return out;
}

std::string EnhancedRMatrix::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["dim"] = dim;
    nlohmann::json vars = nlohmann::json::array();
    for (size_t i = 0; i < ctx->size(); ++i)
        vars.push_back({{"name", ctx->var(i).name}, {"sqrt", ctx->var(i).sqrt}});
    j["ctx"] = std::move(vars);
    j["R"] = nlohmann::json::parse(R.to_json());
    j["R_inv"] = nlohmann::json::parse(R_inv.to_json());
    j["h"] = nlohmann::json::parse(h.to_json());
    nlohmann::json gs = nlohmann::json::array();
    for (const auto& g : gradings)
        gs.push_back({{"label", g.label}, {"weights", g.weights}});
    j["gradings"] = std::move(gs);
    j["has_enhancement"] = has_enhancement;
    if (!enhancement_note.empty()) j["enhancement_note"] = enhancement_note;
    return j.dump();
}

EnhancedRMatrix EnhancedRMatrix::from_json(const std::string& json) {
    const nlohmann::json j = nlohmann::json::parse(json);
    if (!j.is_object() || !j.contains("ctx") || !j.contains("R") || !j.contains("h"))
        throw std::invalid_argument(
            "EnhancedRMatrix: JSON object with ctx, R and h required");
    std::vector<VarContext::Var> vars;
    for (const auto& v : j.at("ctx"))
        vars.push_back({v.at("name").get<std::string>(),
                        v.value("sqrt", false)});
    EnhancedRMatrix E;
    E.ctx = VarContext::make(std::move(vars));
    E.name = j.value("name", std::string("custom"));
    E.R = SparseOp::from_json(E.ctx, j.at("R").dump());
    if (E.R.arity() != 2)
        throw std::invalid_argument("EnhancedRMatrix: R must have arity 2");
    E.dim = E.R.dim();
    E.R_inv = j.contains("R_inv") ? SparseOp::from_json(E.ctx, j.at("R_inv").dump())
                                  : E.R.invert();
    E.h = SparseOp::from_json(E.ctx, j.at("h").dump());
    if (E.h.arity() != 1 || E.h.dim() != E.dim)
        throw std::invalid_argument("EnhancedRMatrix: h must have arity 1 and match R");
    if (j.contains("gradings")) {
        for (const auto& g : j.at("gradings")) {
            Grading gr;
            gr.label = g.at("label").get<std::string>();
            gr.weights = g.at("weights").get<std::vector<std::vector<long>>>();
            E.gradings.push_back(std::move(gr));
        }
    }
    E.has_enhancement = j.value("has_enhancement", true);
    E.enhancement_note = j.value("enhancement_note", std::string());
    return E;
}

}  // namespace knotpoly
