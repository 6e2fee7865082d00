#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knotpoly/enhanced_rmatrix.hpp"
#include "knotpoly/rmatrix_data.hpp"

#include <map>
#include <set>
#include <utility>

using namespace knotpoly;

namespace {

MultiLaurent P(CtxPtr ctx, const std::string& s) { return MultiLaurent::parse(std::move(ctx), s); }

// The Alexander matrix with its variable renamed, promoted into a shared
// two-variable context so two copies can live side by side.
EnhancedRMatrix alexander_in(CtxPtr merged, const std::string& var) {
    EnhancedRMatrix A = build_alexander();
    std::map<std::string, MultiLaurent> im{{"t", MultiLaurent::var(merged, var)}};
    EnhancedRMatrix out;
    out.name = "alexander(" + var + ")";
    out.dim = A.dim;
    out.ctx = merged;
    out.R = A.R.substitute(im, merged);
    out.R_inv = A.R_inv.substitute(im, merged);
    out.h = A.h.substitute(im, merged);
    out.gradings = A.gradings;
    return out;
}

// Mid-swap permutation on four factors of dimension d:
// x1 (x) x2 (x) y1 (x) y2  ->  x1 (x) y1 (x) x2 (x) y2.
SparseOp mid_swap(size_t d, CtxPtr ctx) {
    SparseOp S(d, 4, ctx);
    MultiLaurent one = MultiLaurent::constant(ctx, GaussRational(1));
    for (int a = 1; a <= static_cast<int>(d); ++a)
        for (int b = 1; b <= static_cast<int>(d); ++b)
            for (int c = 1; c <= static_cast<int>(d); ++c)
                for (int e = 1; e <= static_cast<int>(d); ++e)
                    S.set({a, c, b, e}, {a, b, c, e}, one);
    return S;
}

// Product of two enhanced R-matrices on the tensor product space: the braiding
// is the factor-wise braiding conjugated by the mid-swap, the closure operator
// is the tensor product of the two closure operators.
EnhancedRMatrix tensor_pair(const EnhancedRMatrix& A, const EnhancedRMatrix& B) {
    REQUIRE(A.dim == B.dim);  // uniform factor dimension in SparseOp
    size_t d = A.dim;
    SparseOp S = mid_swap(d, A.ctx);
    EnhancedRMatrix out;
    out.name = A.name + " (x) " + B.name;
    out.dim = d * d;
    out.ctx = A.ctx;
    out.R = S.compose(A.R.tensor(B.R)).compose(S).reshaped(d * d, 2);
    out.R_inv = S.compose(A.R_inv.tensor(B.R_inv)).compose(S).reshaped(d * d, 2);
    out.h = A.h.tensor(B.h).reshaped(d * d, 1);
    return out;
}

std::set<std::pair<uint64_t, uint64_t>> support(const SparseOp& A) {
    std::set<std::pair<uint64_t, uint64_t>> s;
    A.for_each([&](uint64_t r, uint64_t c, const MultiLaurent&) { s.emplace(r, c); });
    return s;
}

}  // namespace

TEST_CASE("all catalog matrices satisfy the full axiom suite") {
    for (const std::string& name : catalog_matrix_names()) {
        CAPTURE(name);
        EnhancedRMatrix E = build_catalog_matrix(name);
        AxiomReport rep = check_axioms(E);
        CHECK(rep.all_pass());
        for (const auto& c : rep.checks) {
            CAPTURE(c.name);
            CHECK(c.pass);
        }
    }
    // the sign choices not covered by the catalog defaults
    CHECK(check_axioms(build_v1(GaussRational(-1))).all_pass());
    CHECK(check_axioms(build_lambda_minus1(GaussRational(-1))).all_pass());
}

TEST_CASE("axiom report structure") {
    AxiomReport rep = check_axioms(build_alexander());
    REQUIRE(rep.checks.size() == 6);
    const char* names[] = {"inverse",
                           "h-commutation",
                           "right-partial-trace",
                           "right-partial-trace-inverse",
                           "duality",
                           "yang-baxter"};
    for (const char* n : names) {
        const AxiomCheck* c = rep.find(n);
        REQUIRE(c != nullptr);
        CHECK(c->pass);
        CHECK(!c->residual.has_value());
    }
    CHECK(rep.to_json().find("yang-baxter") != std::string::npos);
}

TEST_CASE("alexander matrix entries and skein character") {
    EnhancedRMatrix E = build_alexander();
    CHECK(E.dim == 2);
    CHECK(E.R.at({1, 1}, {1, 1}) == P(E.ctx, "t^(-1/2)"));
    CHECK(E.R.at({1, 2}, {2, 1}) == P(E.ctx, "t^(-1/2)"));
    CHECK(E.R.at({2, 1}, {1, 2}) == P(E.ctx, "t^(1/2)"));
    CHECK(E.R.at({2, 1}, {2, 1}) == P(E.ctx, "t^(-1/2) - t^(1/2)"));
    CHECK(E.R.at({2, 2}, {2, 2}) == P(E.ctx, "-t^(1/2)"));
    CHECK(E.h.at({1}, {1}) == P(E.ctx, "t^(1/2)"));
    CHECK(E.h.at({2}, {2}) == P(E.ctx, "-t^(1/2)"));

    // R - R^{-1} is a scalar multiple of the identity: the crossing-switch
    // character that drives the Conway-style recursion.
    SparseOp diff = E.R - E.R_inv;
    auto s = diff.as_scalar_multiple_of_identity();
    REQUIRE(s.has_value());
    CHECK(*s == P(E.ctx, "t^(-1/2) - t^(1/2)"));
}

TEST_CASE("trivial closure operator is rejected") {
    EnhancedRMatrix E = build_alexander();
    E.h = SparseOp::identity(2, 1, E.ctx);
    AxiomReport rep = check_axioms(E);
    CHECK_FALSE(rep.all_pass());
    const AxiomCheck* c = rep.find("right-partial-trace");
    REQUIRE(c != nullptr);
    CHECK_FALSE(c->pass);
    REQUIRE(c->residual.has_value());
    CHECK_FALSE(c->residual->is_zero());
}

TEST_CASE("declared gradings are preserved; a wrong grading is detected") {
    for (const std::string& name : catalog_matrix_names()) {
        CAPTURE(name);
        EnhancedRMatrix E = build_catalog_matrix(name);
        CHECK(!E.gradings.empty());
        for (const auto& g : E.gradings) {
            CAPTURE(g.label);
            CHECK(check_grading_preserved(E, g));
        }
    }
    // weight vector that no entry pattern of the 4-dimensional matrix respects
    EnhancedRMatrix V = build_v1(GaussRational(1));
    Grading bad{"broken", {{0}, {1}, {0}, {0}}};
    CHECK_FALSE(check_grading_preserved(V, bad));
}

TEST_CASE("scaled two-variable matrix entries") {
    EnhancedRMatrix L = build_lambda1();
    CHECK(L.dim == 4);
    CHECK(L.R.at({1, 1}, {1, 1}) == P(L.ctx, "t0^(-1/2)*t1^(-1/2)"));
    CHECK(L.R.at({2, 1}, {1, 2}) == P(L.ctx, "t0^(1/2)*t1^(-1/2)"));
    // the closure operator squares to t0*t1 times the identity
    SparseOp h2 = L.h.compose(L.h);
    auto s = h2.as_scalar_multiple_of_identity();
    REQUIRE(s.has_value());
    CHECK(*s == P(L.ctx, "t0*t1"));
}

TEST_CASE("eight-dimensional matrix entries") {
    EnhancedRMatrix M = build_lambda_minus1(GaussRational(1));
    CHECK(M.dim == 8);
    CHECK(M.R.at({1, 1}, {1, 1}) == P(M.ctx, "s^-1*t^-1"));
    CHECK(M.R.at({2, 2}, {2, 2}) == P(M.ctx, "-t^-1"));
    CHECK(M.R.at({1, 2}, {2, 1}) == P(M.ctx, "s^-1*t^-1"));
    CHECK(M.R.at({2, 1}, {1, 2}) == P(M.ctx, "t^-1"));

    EnhancedRMatrix S = build_sl3();
    CHECK(S.dim == 8);
    CHECK(S.R.at({1, 1}, {1, 1}) == P(S.ctx, "t1^2*t2^2"));
    CHECK(S.R.at({2, 6}, {6, 2}).str() == "-i*t1^-1*t2");
    CHECK(S.h.at({1}, {1}) == P(S.ctx, "t1^-2*t2^-2"));

    // identical sparsity pattern: the two matrices are related by a diagonal
    // change of basis together with a monomial substitution, neither of which
    // can create or destroy entries
    CHECK(support(S.R) == support(M.R));
    CHECK(support(S.R_inv) == support(M.R_inv));
}

TEST_CASE("diagonal closure-operator solve") {
    SUBCASE("alexander: unique solution") {
        EnhancedRMatrix E = build_alexander();
        auto cands = solve_diagonal_enhancement(E.R, E.R_inv);
        REQUIRE(cands.size() == 1);
        CHECK(cands[0].solution_dim == 0);
        CHECK(cands[0].accepted);
        REQUIRE(cands[0].diag.size() == 2);
        CHECK(cands[0].diag[0] == P(E.ctx, "t^(1/2)"));
        CHECK(cands[0].diag[1] == P(E.ctx, "-t^(1/2)"));
    }
    SUBCASE("four-dimensional matrix at unit parameter: unique constant solution") {
        for (int rv : {1, -1}) {
            CAPTURE(rv);
            EnhancedRMatrix E = build_v1(GaussRational(rv));
            auto cands = solve_diagonal_enhancement(E.R, E.R_inv);
            REQUIRE(cands.size() == 1);
            CHECK(cands[0].solution_dim == 0);
            CHECK(cands[0].accepted);
            REQUIRE(cands[0].diag.size() == 4);
            CHECK(cands[0].diag[0] == P(E.ctx, "-1"));
            CHECK(cands[0].diag[1] == P(E.ctx, "1"));
            CHECK(cands[0].diag[2] == P(E.ctx, "1"));
            CHECK(cands[0].diag[3] == P(E.ctx, "-1"));
        }
    }
}

TEST_CASE("product matrix on the tensor square of the alexander space") {
    CtxPtr merged = VarContext::make({{"t0", true}, {"t1", true}});
    EnhancedRMatrix A1 = alexander_in(merged, "t1");
    EnhancedRMatrix A0 = alexander_in(merged, "t0");
    EnhancedRMatrix pair = tensor_pair(A1, A0);
    CHECK(pair.dim == 4);

    AxiomReport rep = check_axioms(pair);
    for (const auto& c : rep.checks) {
        CAPTURE(c.name);
        CHECK(c.pass);
    }

    // the product matrix is entry-for-entry the catalog two-variable matrix
    EnhancedRMatrix L = build_lambda1();
    CHECK(pair.R == L.R);
    CHECK(pair.R_inv == L.R_inv);
    CHECK(pair.h == L.h);
}

TEST_CASE("out-of-range parameters are rejected") {
    CHECK_THROWS_AS((void)build_v1(GaussRational(0)), std::invalid_argument);
    CHECK_THROWS_AS((void)build_lambda_minus1(GaussRational(2)), std::invalid_argument);
    CHECK_THROWS_AS((void)build_catalog_matrix("no-such-matrix"), std::invalid_argument);
}

TEST_CASE("four-dimensional matrix away from unit parameter") {
    // Only the two unit values are used for link invariants; the builder
    // flags other parameter values as carrying no valid closure operator.
    EnhancedRMatrix E = build_v1(GaussRational(2));
    CHECK_FALSE(E.has_enhancement);
    CHECK(E.enhancement_note == "R-matrix only, no valid enhancement");
    // the braiding itself is still a braiding at any nonzero parameter
    const AxiomReport rep = check_axioms(E);
    const AxiomCheck* yb = rep.find("yang-baxter");
    REQUIRE(yb != nullptr);
    CHECK(yb->pass);
    const AxiomCheck* inv = rep.find("inverse");
    REQUIRE(inv != nullptr);
    CHECK(inv->pass);
}

TEST_CASE("four-dimensional axioms hold with the parameter left symbolic") {
    // Strongest form of the parameter independence: adjoin the deformation
    // parameter as a ring variable and check every axiom as an identity in
    // it, not merely at sampled values.  The entries are re-transcribed here
    // so this test also freezes the catalog data against accidental edits.
    struct Quint { int r1, r2, c1, c2, rk; const char* poly; };
    static const Quint entries[] = {
        {1,1,1,1, 0, "-1"},      {1,2,2,1, 0, "-1"},      {1,3,3,1, 0, "-1"},
        {1,4,4,1, 0, "-1"},      {2,1,1,2, 0, "-t0"},     {2,1,2,1, 0, "t0-1"},
        {2,2,2,2, 0, "t0"},      {2,3,3,2,-1, "-t1^-1"},  {2,3,4,1, 0, "t1^-1-1"},
        {2,4,4,2,-1, "t1^-1"},   {3,1,1,3, 0, "-t1"},     {3,1,3,1, 0, "t1-1"},
        {3,2,2,3, 1, "-t1"},     {3,2,4,1, 1, "t1-1"},    {3,3,3,3, 0, "t1"},
        {3,4,4,3, 1, "t1"},      {4,1,1,4, 0, "-t0*t1"},  {4,1,2,3, 0, "(t0-1)*t1"},
        {4,1,3,2,-1, "1-t0"},    {4,1,4,1, 0, "t0+t1-2"}, {4,2,2,4, 1, "t0*t1"},
        {4,2,4,2, 0, "t0-1"},    {4,3,3,4,-1, "1"},       {4,3,4,3, 0, "t1-1"},
        {4,4,4,4, 0, "-1"},
    };
    CtxPtr ctx = VarContext::make({{"t0", false}, {"t1", false}, {"r", false}});
    SparseOp R(4, 2, ctx);
    for (const Quint& q : entries) {
        MultiLaurent v = MultiLaurent::parse(ctx, q.poly);
        if (q.rk != 0)
            v = v * MultiLaurent::monomial(ctx, GaussRational(1), {0, 0, q.rk});
        R.set({q.r1, q.r2}, {q.c1, q.c2}, v);
    }
    EnhancedRMatrix E;
    E.name = "v1-symbolic";
    E.dim = 4;
    E.ctx = ctx;
    E.R_inv = R.invert();
    E.R = std::move(R);
    E.h = SparseOp::diagonal(
        ctx, {P(ctx, "-1"), P(ctx, "1"), P(ctx, "1"), P(ctx, "-1")});
    CHECK(check_axioms(E).all_pass());
    // specializing the symbol to 1 recovers the catalog matrix exactly
    EnhancedRMatrix V = build_v1(GaussRational(1));
    CHECK(E.R.substitute({{"t0", MultiLaurent::var(V.ctx, "t0")},
                          {"t1", MultiLaurent::var(V.ctx, "t1")},
                          {"r", MultiLaurent::constant(V.ctx, GaussRational(1))}},
                         V.ctx) == V.R);
}

TEST_CASE("enhanced matrix JSON round-trip") {
    EnhancedRMatrix E = build_v1(GaussRational(-1));
    EnhancedRMatrix F = EnhancedRMatrix::from_json(E.to_json());
    CHECK(F.name == E.name);
    CHECK(F.dim == E.dim);
    CHECK(F.R == E.R.substitute({{"t0", MultiLaurent::var(F.ctx, "t0")},
                                 {"t1", MultiLaurent::var(F.ctx, "t1")}},
                                F.ctx));
    REQUIRE(F.gradings.size() == E.gradings.size());
    CHECK(F.gradings[0].label == E.gradings[0].label);
    CHECK(F.gradings[0].weights == E.gradings[0].weights);
    CHECK(F.has_enhancement == E.has_enhancement);
    // round-tripped matrix still verifies
    CHECK(check_axioms(F).all_pass());
}
