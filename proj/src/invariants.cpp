#include "knotpoly/invariants.hpp"

#include "knotpoly/rmatrix_data.hpp"

#include <json.hpp>

#include <stdexcept>
#include <utility>

namespace knotpoly {
namespace {

// The catalog matrices are immutable; build each once and share.
const EnhancedRMatrix& cached_matrix(const std::string& name) {
    static const EnhancedRMatrix alex = build_catalog_matrix("alexander");
    static const EnhancedRMatrix v = build_catalog_matrix("v1");
    static const EnhancedRMatrix l1 = build_catalog_matrix("lambda1");
    static const EnhancedRMatrix lm1 = build_catalog_matrix("lambda-1");
    static const EnhancedRMatrix s3 = build_catalog_matrix("sl3");
    if (name == "alexander") return alex;
    if (name == "v1") return v;
    if (name == "lambda1") return l1;
    if (name == "lambda-1") return lm1;
    if (name == "sl3") return s3;
    throw std::invalid_argument("unknown invariant '" + name + "'");
}

InvariantValue make_value(const std::string& name, const BraidWord& beta) {
    const EnhancedRMatrix& E = cached_matrix(name);
    ClosureResult r = closure_mrt(E, beta);
    InvariantValue out;
    out.name = name;
    out.value = std::move(r.scalar);
    out.braid = beta;
    out.components = r.components;
    return out;
}

} // namespace

std::string InvariantValue::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["braid"] = nlohmann::json::parse(braid.to_json());
    j["components"] = components;
    j["value"] = nlohmann::json::parse(value.to_json());
    return j.dump();
}

InvariantValue alexander(const BraidWord& beta) { return make_value("alexander", beta); }
InvariantValue v1(const BraidWord& beta) { return make_value("v1", beta); }
InvariantValue lambda1(const BraidWord& beta) { return make_value("lambda1", beta); }
InvariantValue lambda_minus1(const BraidWord& beta) { return make_value("lambda-1", beta); }
InvariantValue delta_sl3(const BraidWord& beta) { return make_value("sl3", beta); }

InvariantValue compute_invariant(const std::string& name, const BraidWord& beta) {
    return make_value(name, beta);
}

EnhancedRMatrix tensor_product_pair(const EnhancedRMatrix& E1, const EnhancedRMatrix& E2) {
    // merge the variable lists by name
    std::vector<VarContext::Var> vars;
    for (size_t i = 0; i < E1.ctx->size(); ++i) vars.push_back(E1.ctx->var(i));
    for (size_t i = 0; i < E2.ctx->size(); ++i) {
        const VarContext::Var& v = E2.ctx->var(i);
        bool found = false;
        for (const VarContext::Var& w : vars) {
            if (w.name == v.name) {
                if (w.sqrt != v.sqrt)
                    throw std::invalid_argument(
                        "variable '" + v.name + "' declared with conflicting square-root flags");
                found = true;
                break;
            }
        }
        if (!found) vars.push_back(v);
    }
    const CtxPtr merged = VarContext::make(std::move(vars));

    const size_t d1 = E1.dim;
    const size_t d2 = E2.dim;
    const size_t D = d1 * d2;
    const auto fl = [d2](int x, int y) {
        return (x - 1) * static_cast<int>(d2) + y;
    };

    const auto pair_two_site = [&](const SparseOp& A, const SparseOp& B) {
        SparseOp out(D, 2, merged);
        const SparseOp Ap = A.promote(merged);
        const SparseOp Bp = B.promote(merged);
        Ap.for_each([&](uint64_t ar, uint64_t ac, const MultiLaurent& av) {
            const auto aro = SparseOp::unflatten(ar, d1, 2);
            const auto aco = SparseOp::unflatten(ac, d1, 2);
            Bp.for_each([&](uint64_t br, uint64_t bc, const MultiLaurent& bv) {
                const auto bro = SparseOp::unflatten(br, d2, 2);
                const auto bco = SparseOp::unflatten(bc, d2, 2);
                out.set({fl(aro[0], bro[0]), fl(aro[1], bro[1])},
                        {fl(aco[0], bco[0]), fl(aco[1], bco[1])}, av * bv);
            });
        });
        return out;
    };

    EnhancedRMatrix out;
    out.name = E1.name + "*" + E2.name;
    out.dim = D;
    out.ctx = merged;
    out.R = pair_two_site(E1.R, E2.R);
    out.R_inv = pair_two_site(E1.R_inv, E2.R_inv);
    {
        SparseOp h(D, 1, merged);
        const SparseOp h1 = E1.h.promote(merged);
        const SparseOp h2 = E2.h.promote(merged);
        h1.for_each([&](uint64_t ar, uint64_t ac, const MultiLaurent& av) {
            h2.for_each([&](uint64_t br, uint64_t bc, const MultiLaurent& bv) {
                h.set({fl(static_cast<int>(ar) + 1, static_cast<int>(br) + 1)},
                      {fl(static_cast<int>(ac) + 1, static_cast<int>(bc) + 1)}, av * bv);
            });
        });
        out.h = std::move(h);
    }
    out.has_enhancement = E1.has_enhancement && E2.has_enhancement;

    // factor gradings extend to the pair space by reading one coordinate
    for (const Grading& g : E1.gradings) {
        Grading lifted;
        lifted.label = "left:" + g.label;
        lifted.weights.resize(D);
        for (size_t x = 1; x <= d1; ++x)
            for (size_t y = 1; y <= d2; ++y)
                lifted.weights[static_cast<size_t>(fl(static_cast<int>(x),
                                                      static_cast<int>(y))) - 1] =
                    g.weights[x - 1];
        out.gradings.push_back(std::move(lifted));
    }
    for (const Grading& g : E2.gradings) {
        Grading lifted;
        lifted.label = "right:" + g.label;
        lifted.weights.resize(D);
        for (size_t x = 1; x <= d1; ++x)
            for (size_t y = 1; y <= d2; ++y)
                lifted.weights[static_cast<size_t>(fl(static_cast<int>(x),
                                                      static_cast<int>(y))) - 1] =
                    g.weights[y - 1];
        out.gradings.push_back(std::move(lifted));
    }

    const AxiomReport rep = check_axioms(out);
    if (!rep.all_pass())
        throw std::logic_error("product pair '" + out.name +
                               "' failed verification:\n" + rep.str());
    return out;
}

std::string EqualityReport::str() const {
    if (pass) return "equal: " + lhs.str();
    return "MISMATCH: lhs = " + lhs.str() + "  rhs = " + rhs.str();
}

EqualityReport check_alexander_factorization(const BraidWord& beta) {
    const MultiLaurent big = lambda1(beta).value;
    const CtxPtr& L = big.ctx();
    const MultiLaurent small = alexander(beta).value;
    const MultiLaurent in_t0 =
        small.substitute({{"t", MultiLaurent::var(L, "t0")}}, L);
    const MultiLaurent in_t1 =
        small.substitute({{"t", MultiLaurent::var(L, "t1")}}, L);
    EqualityReport rep;
    rep.lhs = big;
    rep.rhs = in_t0 * in_t1;
    rep.pass = rep.lhs == rep.rhs;
    return rep;
}

EqualityReport check_sl3_specialization(const BraidWord& beta) {
    const MultiLaurent direct = delta_sl3(beta).value;
    const CtxPtr& S = direct.ctx();
    const MultiLaurent raw = lambda_minus1(beta).value;
    EqualityReport rep;
    rep.lhs = raw.substitute({{"s", MultiLaurent::var(S, "t1", -2)},
                              {"t", MultiLaurent::var(S, "t2", -2)}},
                             S);
    rep.rhs = direct;
    rep.pass = rep.lhs == rep.rhs;
    return rep;
}

SkeinTriple skein_triple(const BraidWord& beta, int position) {
    beta.validate();
    if (position < 1 || position > beta.strands - 1)
        throw std::invalid_argument("skein position out of range");
    BraidWord plus = beta, minus = beta;
    plus.letters.push_back(position);
    minus.letters.push_back(-position);
    SkeinTriple t;
    t.plus = alexander(plus).value;
    t.minus = alexander(minus).value;
    t.smoothed = alexander(beta).value;
    const MultiLaurent z =
        MultiLaurent::parse(t.plus.ctx(), "t^(-1/2) - t^(1/2)");
    t.residual = t.plus - t.minus - z * t.smoothed;
    return t;
}

bool integral_laurent(const MultiLaurent& v, std::string* offending) {
    const CtxPtr& ctx = v.ctx();
    for (const auto& [exps, coeff] : v.term_list()) {
        bool bad = coeff.re.get_den() != 1 || coeff.im.get_den() != 1;
        for (size_t i = 0; i < exps.size() && !bad; ++i)
            if (ctx->var(i).sqrt && exps[i] % 2 != 0) bad = true;
        if (bad) {
            if (offending != nullptr) {
                std::vector<int> e(exps.begin(), exps.end());
                *offending = MultiLaurent::monomial(ctx, coeff, e).str();
            }
            return false;
        }
    }
    return true;
}

MultiLaurent cleared_of_unit(const MultiLaurent& v) {
    if (v.is_zero()) return v;
    const auto terms = v.term_list();
    std::vector<int> mins = terms.front().first;
    for (const auto& [exps, coeff] : terms)
        for (size_t i = 0; i < exps.size(); ++i)
            mins[i] = std::min(mins[i], exps[i]);
    for (int& m : mins) m = -m;
    MultiLaurent shifted =
        v * MultiLaurent::monomial(v.ctx(), GaussRational(1), mins);
    const GaussRational lead = shifted.term_list().front().second;
    const bool unit = (lead.im == 0 && (lead.re == 1 || lead.re == -1)) ||
                      (lead.re == 0 && (lead.im == 1 || lead.im == -1));
    if (unit && !(lead.re == 1 && lead.im == 0))
        shifted = shifted * GaussRational(lead.re, mpq_class(-lead.im));
    return shifted;
}

} // namespace knotpoly
