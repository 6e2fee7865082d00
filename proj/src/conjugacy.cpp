#include "knotpoly/conjugacy.hpp"

#include "knotpoly/rmatrix_data.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace knotpoly {

namespace {

const char* mark(bool ok) { return ok ? "pass" : "FAIL"; }

// The weight grading of the eight-dimensional two-variable matrix: basis
// vector i carries the pair (w1(i), w2(i)).
const Grading& weight_grading(const EnhancedRMatrix& E) {
    for (const Grading& g : E.gradings)
        if (g.label == "weight") return g;
    throw std::logic_error("weight_grading: matrix " + E.name + " carries no weight grading");
}

// The square-root-variable eight-dimensional braiding/closure pair moved into
// the two-variable context via s -> t1^-2, t -> t2^-2.
SparseOp substituted_lambda_r(const CtxPtr& target) {
    const EnhancedRMatrix lam = build_lambda_minus1(GaussRational(1));
    const std::map<std::string, MultiLaurent> images = {
        {"s", MultiLaurent::var(target, "t1", -2)},
        {"t", MultiLaurent::var(target, "t2", -2)}};
    return lam.R.substitute(images, target);
}

SparseOp substituted_lambda_h(const CtxPtr& target) {
    const EnhancedRMatrix lam = build_lambda_minus1(GaussRational(1));
    const std::map<std::string, MultiLaurent> images = {
        {"s", MultiLaurent::var(target, "t1", -2)},
        {"t", MultiLaurent::var(target, "t2", -2)}};
    return lam.h.substitute(images, target);
}

// A tangle operator on n factors: a pseudo-random braid on m >= n strands
// whose extra strands are closed off one at a time by h-weighted partial
// traces.  Word length and the extra strand are drawn from rng.
SparseOp sample_tangle_op(const EnhancedRMatrix& E, int n, std::mt19937_64& rng) {
    const int m = n + static_cast<int>(rng() % 2);
    BraidWord beta;
    beta.strands = m;
    const int len = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < len; ++i) {
        const int k = 1 + static_cast<int>(rng() % (m - 1));
        beta.letters.push_back((rng() % 2) ? k : -k);
    }
    SparseOp F = rho(E, beta);
    for (int site = m; site > n; --site) {
        const SparseOp deco =
            SparseOp::identity(E.dim, static_cast<size_t>(site) - 1, E.ctx).tensor(E.h);
        F = deco.compose(F).partial_trace(static_cast<size_t>(site));
    }
    return F;
}

}  // namespace

EnhancedRMatrix conjugate(const EnhancedRMatrix& E, const SparseOp& phi) {
    if (phi.arity() != 1 || phi.dim() != E.dim)
        throw std::invalid_argument(
            "conjugate: phi must be a one-factor map of dimension " + std::to_string(E.dim));
    if (!E.has_enhancement)
        throw std::invalid_argument("conjugate: " + E.name + " has no valid closure operator");

    const SparseOp phi_inv = phi.invert();  // std::domain_error when singular
    const SparseOp phi2 = phi.tensor(phi);
    const SparseOp phi2_inv = phi_inv.tensor(phi_inv);

    EnhancedRMatrix out;
    out.name = E.name + "-conjugated";
    out.dim = E.dim;
    out.ctx = E.ctx;
    out.R = phi2.compose(E.R).compose(phi2_inv);
    out.R_inv = phi2.compose(E.R_inv).compose(phi2_inv);
    out.h = phi.compose(E.h).compose(phi_inv);

    const AxiomReport rep = check_axioms(out);
    if (!rep.all_pass())
        throw std::logic_error("conjugate: result for " + E.name +
                               " fails re-verification:\n" + rep.str());
    return out;
}

std::string ProductConjugacyReport::str() const {
    std::ostringstream out;
    out << mark(r_equal) << "  braiding equals flattened product\n";
    out << mark(h_equal) << "  closure operator equals flattened product\n";
    out << mark(perturbed_fails) << "  transposed flattening breaks the equality\n";
    return out.str();
}

ProductConjugacyReport check_product_conjugacy() {
    const EnhancedRMatrix L = build_lambda1();
    const CtxPtr& ctx = L.ctx;

    // One-variable factors renamed into the two-variable context: the first
    // tensor slot carries t1, the second t0.
    const EnhancedRMatrix A = build_alexander();
    const std::map<std::string, MultiLaurent> to_t1 = {{"t", MultiLaurent::var(ctx, "t1")}};
    const std::map<std::string, MultiLaurent> to_t0 = {{"t", MultiLaurent::var(ctx, "t0")}};
    const SparseOp r1 = A.R.substitute(to_t1, ctx);
    const SparseOp r0 = A.R.substitute(to_t0, ctx);
    const SparseOp h1 = A.h.substitute(to_t1, ctx);
    const SparseOp h0 = A.h.substitute(to_t0, ctx);

    // Middle-factor swap on four two-dimensional factors.
    SparseOp tau(2, 4, ctx);
    const MultiLaurent one = MultiLaurent::constant(ctx, GaussRational(1));
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            for (int c = 1; c <= 2; ++c)
                for (int d = 1; d <= 2; ++d) tau.set({a, c, b, d}, {a, b, c, d}, one);

    // tau o (R (x) R') o tau pairs the braidings slotwise; reshaping regroups
    // the four two-dimensional factors into two four-dimensional ones.
    const SparseOp mid = tau.compose(r1.tensor(r0)).compose(tau).reshaped(4, 2);
    const SparseOp h_prod = h1.tensor(h0).reshaped(4, 1);

    ProductConjugacyReport rep;

    const SparseOp theta = SparseOp::identity(4, 1, ctx);
    const SparseOp theta2 = theta.tensor(theta);
    rep.r_equal = theta2.compose(mid).compose(theta2.invert()) == L.R;
    rep.h_equal = theta.compose(h_prod).compose(theta.invert()) == L.h;

    // The identification is rigid: routing the mixed pairs to the transposed
    // basis slots (2 <-> 3) must produce a different operator.
    SparseOp swapped(4, 1, ctx);
    swapped.set({1}, {1}, one);
    swapped.set({3}, {2}, one);
    swapped.set({2}, {3}, one);
    swapped.set({4}, {4}, one);
    const SparseOp swapped2 = swapped.tensor(swapped);
    rep.perturbed_fails = swapped2.compose(mid).compose(swapped2.invert()) != L.R;
    return rep;
}

WeakConjugacyData build_weak_conjugacy_data() {
    const EnhancedRMatrix S = build_sl3();
    const Grading& wt = weight_grading(S);
    const CtxPtr& ctx = S.ctx;
    const GaussRational phase(0, -1);  // -i
    const size_t dim = S.dim;

    std::vector<MultiLaurent> sigma_diag, nu_diag;
    sigma_diag.reserve(dim);
    nu_diag.reserve(dim);
    for (size_t i = 1; i <= dim; ++i) {
        sigma_diag.push_back(
            MultiLaurent::constant(ctx, i >= 5 ? phase : GaussRational(1)));
        nu_diag.push_back(MultiLaurent::monomial(
            ctx, GaussRational(1),
            {-static_cast<int>(wt.weights[i - 1][0]), -static_cast<int>(wt.weights[i - 1][1])}));
    }

    WeakConjugacyData d;
    d.ctx = ctx;
    d.sigma = SparseOp::diagonal(ctx, sigma_diag);
    d.nu = SparseOp::diagonal(ctx, nu_diag);
    d.gamma = SparseOp(dim, 2, ctx);
    for (int i = 1; i <= static_cast<int>(dim); ++i)
        for (int j = 1; j <= static_cast<int>(dim); ++j) {
            const long e = wt.weights[i - 1][1] * wt.weights[j - 1][0];
            d.gamma.set({i, j}, {i, j}, MultiLaurent::constant(ctx, phase.pow(e)));
        }
    return d;
}

BasisChangeTower build_basis_change(const WeakConjugacyData& d, int n) {
    if (n < 1) throw std::invalid_argument("build_basis_change: n must be at least 1");
    const CtxPtr& ctx = d.ctx;
    const size_t dim = d.sigma.dim();

    BasisChangeTower t;
    t.n = n;

    // Left block: (sigma o nu^(n-1)) (x) (sigma o nu^(n-2)) (x) ... (x) sigma.
    std::vector<SparseOp> nu_powers;
    nu_powers.push_back(SparseOp::identity(dim, 1, ctx));
    for (int k = 1; k < n; ++k) nu_powers.push_back(nu_powers.back().compose(d.nu));
    SparseOp left = d.sigma.compose(nu_powers[static_cast<size_t>(n - 1)]);
    for (int i = 2; i <= n; ++i)
        left = left.tensor(d.sigma.compose(nu_powers[static_cast<size_t>(n - i)]));

    // Twist block: all ordered pairs of sites get a gamma factor.
    SparseOp twist = SparseOp::identity(dim, static_cast<size_t>(n), ctx);
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            twist = twist.compose(d.gamma.embed_two_site(
                static_cast<size_t>(i), static_cast<size_t>(j), static_cast<size_t>(n)));

    t.phi = left.compose(twist);

    if (n == 1) {
        t.nu_rest = SparseOp::identity(dim, 1, ctx);
        t.gamma_last = SparseOp::identity(dim, 1, ctx);
        t.factorization_ok = true;
        return t;
    }

    SparseOp nu_rest = d.nu;
    for (int i = 2; i < n; ++i) nu_rest = nu_rest.tensor(d.nu);
    t.nu_rest = nu_rest;

    SparseOp gamma_last = SparseOp::identity(dim, static_cast<size_t>(n), ctx);
    for (int i = 1; i < n; ++i)
        gamma_last = gamma_last.compose(d.gamma.embed_two_site(
            static_cast<size_t>(i), static_cast<size_t>(n), static_cast<size_t>(n)));
    t.gamma_last = gamma_last;

    const SparseOp prev = build_basis_change(d, n - 1).phi;
    const SparseOp recomposed = prev.tensor(SparseOp::identity(dim, 1, ctx))
                                    .compose(t.nu_rest.tensor(d.sigma))
                                    .compose(t.gamma_last);
    t.factorization_ok = recomposed == t.phi;
    return t;
}

std::string EightDimConjugacyReport::str() const {
    std::ostringstream out;
    out << mark(r_equal) << "  conjugated braiding equals the substituted one\n";
    out << mark(phase_needed) << "  dropping the imaginary phases breaks the equality\n";
    return out.str();
}

EightDimConjugacyReport check_eight_dim_conjugacy() {
    const EnhancedRMatrix S = build_sl3();
    const WeakConjugacyData d = build_weak_conjugacy_data();
    const SparseOp target = substituted_lambda_r(S.ctx);

    EightDimConjugacyReport rep;
    const SparseOp phi = build_basis_change(d, 2).phi;
    rep.r_equal = phi.compose(S.R).compose(phi.invert()) == target;

    WeakConjugacyData unphased = d;
    unphased.sigma = SparseOp::identity(S.dim, 1, d.ctx);
    const SparseOp phi0 = build_basis_change(unphased, 2).phi;
    rep.phase_needed = phi0.compose(S.R).compose(phi0.invert()) != target;
    return rep;
}

bool check_embedded_conjugacy(int n, int k) {
    if (!(1 <= k && k < n))
        throw std::invalid_argument("check_embedded_conjugacy: need 1 <= k < n");
    const EnhancedRMatrix S = build_sl3();
    const WeakConjugacyData d = build_weak_conjugacy_data();
    const SparseOp target = substituted_lambda_r(S.ctx);
    const SparseOp phi = build_basis_change(d, n).phi;

    const auto uk = static_cast<size_t>(k);
    const auto un = static_cast<size_t>(n);
    const SparseOp lhs =
        phi.compose(S.R.embed_two_site(uk, uk + 1, un)).compose(phi.invert());
    return lhs == target.embed_two_site(uk, uk + 1, un);
}

bool ClosureCompatReport::all_pass() const {
    return enhancement_match && single_factor_match && pair_twist_pass == samples &&
           scaling_pass == samples && (n != 2 || left_twist_pass == samples);
}

std::string ClosureCompatReport::str() const {
    std::ostringstream out;
    out << mark(enhancement_match) << "  transported closure operator matches\n";
    out << mark(single_factor_match) << "  single-factor scaling fixes the closure operator\n";
    out << mark(pair_twist_pass == samples) << "  pair twist invisible to weighted trace ("
        << pair_twist_pass << "/" << samples << ")\n";
    out << mark(scaling_pass == samples) << "  factor scaling commutes with weighted trace ("
        << scaling_pass << "/" << samples << ")\n";
    if (n == 2)
        out << mark(left_twist_pass == samples) << "  left-closure twist invisible ("
            << left_twist_pass << "/" << samples << ")\n";
    return out.str();
}

ClosureCompatReport check_closure_compatibility(int n, int samples, uint64_t seed) {
    if (n < 2) throw std::invalid_argument("check_closure_compatibility: n must be at least 2");
    if (samples < 1)
        throw std::invalid_argument("check_closure_compatibility: samples must be positive");

    const EnhancedRMatrix S = build_sl3();
    const WeakConjugacyData d = build_weak_conjugacy_data();
    const BasisChangeTower t = build_basis_change(d, n);
    const CtxPtr& ctx = S.ctx;

    ClosureCompatReport rep;
    rep.n = n;
    rep.samples = samples;

    const SparseOp h_sub = substituted_lambda_h(ctx);
    rep.enhancement_match = d.sigma.invert().compose(h_sub).compose(d.sigma) == S.h;
    rep.single_factor_match = d.nu.invert().compose(S.h).compose(d.nu) == S.h;

    const SparseOp deco =
        SparseOp::identity(S.dim, static_cast<size_t>(n) - 1, ctx).tensor(S.h);
    const SparseOp gamma_inv = t.gamma_last.invert();
    const SparseOp nu_rest_inv = t.nu_rest.invert();
    const SparseOp left_deco = S.h.invert().tensor(SparseOp::identity(S.dim, 1, ctx));

    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        const SparseOp F = sample_tangle_op(S, n, rng);
        const SparseOp closed = deco.compose(F).partial_trace(static_cast<size_t>(n));

        const SparseOp twisted = deco.compose(t.gamma_last)
                                     .compose(F)
                                     .compose(gamma_inv)
                                     .partial_trace(static_cast<size_t>(n));
        if (twisted == closed) ++rep.pair_twist_pass;

        if (t.nu_rest.compose(closed).compose(nu_rest_inv) == closed) ++rep.scaling_pass;

        if (n == 2) {
            const SparseOp lhs = left_deco.compose(t.gamma_last)
                                     .compose(F)
                                     .compose(gamma_inv)
                                     .partial_trace(1);
            if (lhs == left_deco.compose(F).partial_trace(1)) ++rep.left_twist_pass;
        }
    }
    return rep;
}

bool check_weight_commutation() {
    const EnhancedRMatrix S = build_sl3();
    const Grading& wt = weight_grading(S);
    const CtxPtr& ctx = S.ctx;
    const GaussRational phase(0, -1);
    const int dim = static_cast<int>(S.dim);

    for (int a = 1; a <= dim; ++a) {
        SparseOp left_pair(S.dim, 2, ctx), right_pair(S.dim, 2, ctx);
        for (int i = 1; i <= dim; ++i)
            for (int j = 1; j <= dim; ++j) {
                const long w1 = wt.weights[i - 1][0] + wt.weights[j - 1][0];
                const long w2 = wt.weights[i - 1][1] + wt.weights[j - 1][1];
                left_pair.set({i, j}, {i, j},
                              MultiLaurent::constant(ctx, phase.pow(wt.weights[a - 1][1] * w1)));
                right_pair.set({i, j}, {i, j},
                               MultiLaurent::constant(ctx, phase.pow(w2 * wt.weights[a - 1][0])));
            }
        if (left_pair.compose(S.R) != S.R.compose(left_pair)) return false;
        if (right_pair.compose(S.R) != S.R.compose(right_pair)) return false;
    }

    const WeakConjugacyData d = build_weak_conjugacy_data();
    const SparseOp nn = d.nu.tensor(d.nu);
    return nn.compose(S.R) == S.R.compose(nn);
}

EqualityReport check_invariant_transfer(const BraidWord& beta) {
    return check_sl3_specialization(beta);
}

}  // namespace knotpoly
