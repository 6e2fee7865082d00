#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knotpoly/conjugacy.hpp"
#include "knotpoly/rmatrix_data.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

using namespace knotpoly;

namespace {

MultiLaurent P(CtxPtr ctx, const std::string& s) { return MultiLaurent::parse(std::move(ctx), s); }

BraidWord braid(int strands, std::vector<int> letters) {
    BraidWord b;
    b.strands = strands;
    b.letters = std::move(letters);
    b.validate();
    return b;
}

}  // namespace

TEST_CASE("conjugation by the identity and by scalars is invisible") {
    const EnhancedRMatrix A = build_alexander();

    const EnhancedRMatrix by_id = conjugate(A, SparseOp::identity(2, 1, A.ctx));
    CHECK(by_id.R == A.R);
    CHECK(by_id.R_inv == A.R_inv);
    CHECK(by_id.h == A.h);

    const MultiLaurent u = P(A.ctx, "3*t^(1/2)");
    const EnhancedRMatrix by_scalar = conjugate(A, SparseOp::identity(2, 1, A.ctx) * u);
    CHECK(by_scalar.R == A.R);
    CHECK(by_scalar.R_inv == A.R_inv);
    CHECK(by_scalar.h == A.h);
}

TEST_CASE("conjugation preserves the defining identities") {
    const EnhancedRMatrix A = build_alexander();
    const MultiLaurent one = MultiLaurent::constant(A.ctx, GaussRational(1));

    // the documented example: diag(1, u) with a unit u
    const SparseOp diag_u =
        SparseOp::diagonal(A.ctx, {one, MultiLaurent::var(A.ctx, "t")});
    const EnhancedRMatrix E1 = conjugate(A, diag_u);
    CHECK(check_axioms(E1).all_pass());
    CHECK(E1.h == A.h);  // diagonal maps commute with a diagonal h

    // seeded random diagonal conjugations: unit monomials c * t^(k/2)
    std::mt19937_64 rng(314);
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<MultiLaurent> diag;
        for (int i = 0; i < 2; ++i) {
            const long c = 1 + static_cast<long>(rng() % 3);
            const int k = static_cast<int>(rng() % 5) - 2;
            diag.push_back(MultiLaurent::monomial(A.ctx, GaussRational(c), {k}));
        }
        CHECK(check_axioms(conjugate(A, SparseOp::diagonal(A.ctx, diag))).all_pass());
    }

    // a permutation of the four-dimensional basis
    const EnhancedRMatrix V = build_v1(GaussRational(1));
    const MultiLaurent vone = MultiLaurent::constant(V.ctx, GaussRational(1));
    SparseOp cycle(4, 1, V.ctx);
    cycle.set({2}, {1}, vone);
    cycle.set({3}, {2}, vone);
    cycle.set({4}, {3}, vone);
    cycle.set({1}, {4}, vone);
    const EnhancedRMatrix E2 = conjugate(V, cycle);
    CHECK(check_axioms(E2).all_pass());
    CHECK(E2.R != V.R);  // genuinely a different basis, same identities
}

TEST_CASE("degenerate or mismatched basis maps are rejected") {
    const EnhancedRMatrix A = build_alexander();
    const MultiLaurent one = MultiLaurent::constant(A.ctx, GaussRational(1));
    const MultiLaurent zero = MultiLaurent::constant(A.ctx, GaussRational(0));

    CHECK_THROWS_AS(conjugate(A, SparseOp::diagonal(A.ctx, {one, zero})), std::domain_error);
    CHECK_THROWS_AS(conjugate(A, SparseOp::identity(2, 2, A.ctx)), std::invalid_argument);
    CHECK_THROWS_AS(conjugate(A, SparseOp::identity(3, 1, A.ctx)), std::invalid_argument);

    const EnhancedRMatrix bare = build_v1(GaussRational(2));  // no valid closure operator
    CHECK_THROWS_AS(conjugate(bare, SparseOp::identity(4, 1, bare.ctx)), std::invalid_argument);
}

TEST_CASE("four-dimensional matrix is a flattened product of one-variable matrices") {
    const ProductConjugacyReport rep = check_product_conjugacy();
    CHECK(rep.r_equal);
    CHECK(rep.h_equal);
    CHECK(rep.perturbed_fails);
    CHECK(rep.all_pass());
}

TEST_CASE("basis-change tower pieces and recursion") {
    const WeakConjugacyData d = build_weak_conjugacy_data();
    CHECK(d.sigma.entry_count() == 8);
    CHECK(d.nu.entry_count() == 8);
    CHECK(d.gamma.entry_count() == 64);

    // expected elementary values
    CHECK(d.sigma.at({5}, {5}) == MultiLaurent::constant(d.ctx, GaussRational(0, -1)));
    CHECK(d.sigma.at({1}, {1}) == MultiLaurent::constant(d.ctx, GaussRational(1)));
    CHECK(d.nu.at({6}, {6}) == P(d.ctx, "t1^-2*t2^-1"));   // weight (2,1)
    CHECK(d.gamma.at({3, 2}, {3, 2}) ==
          MultiLaurent::constant(d.ctx, GaussRational(0, -1)));  // w2=1 meets w1=1
    CHECK(d.gamma.at({2, 3}, {2, 3}) == MultiLaurent::constant(d.ctx, GaussRational(1)));

    // n = 1 collapses to sigma
    CHECK(build_basis_change(d, 1).phi == d.sigma);

    // n = 2 matches the explicit composite
    const SparseOp id1 = SparseOp::identity(8, 1, d.ctx);
    const SparseOp expected =
        d.sigma.tensor(d.sigma).compose(d.nu.tensor(id1)).compose(d.gamma);
    const BasisChangeTower t2 = build_basis_change(d, 2);
    CHECK(t2.phi == expected);
    CHECK(t2.factorization_ok);

    // the recursion holds exactly up the tower
    CHECK(build_basis_change(d, 3).factorization_ok);
    CHECK(build_basis_change(d, 4).factorization_ok);

    CHECK_THROWS_AS(build_basis_change(d, 0), std::invalid_argument);
}

TEST_CASE("eight-dimensional conjugacy requires the imaginary phases") {
    const EightDimConjugacyReport rep = check_eight_dim_conjugacy();
    CHECK(rep.r_equal);
    CHECK(rep.phase_needed);
    CHECK(rep.all_pass());

    // spot value: the top diagonal entry matches across the variable change
    const EnhancedRMatrix S = build_sl3();
    const EnhancedRMatrix lam = build_lambda_minus1(GaussRational(1));
    const std::map<std::string, MultiLaurent> images = {
        {"s", MultiLaurent::var(S.ctx, "t1", -2)},
        {"t", MultiLaurent::var(S.ctx, "t2", -2)}};
    const SparseOp target = lam.R.substitute(images, S.ctx);
    CHECK(target.at({1, 1}, {1, 1}) == P(S.ctx, "t1^2*t2^2"));
    CHECK(S.R.at({1, 1}, {1, 1}) == P(S.ctx, "t1^2*t2^2"));
}

TEST_CASE("embedded conjugacy holds on wider towers") {
    CHECK(check_embedded_conjugacy(2, 1));
    CHECK(check_embedded_conjugacy(3, 1));
    CHECK(check_embedded_conjugacy(3, 2));
    CHECK(check_embedded_conjugacy(4, 2));
    CHECK_THROWS_AS(check_embedded_conjugacy(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(check_embedded_conjugacy(1, 1), std::invalid_argument);
}

TEST_CASE("tower pieces are invisible to weighted closures of sampled tangles") {
    const ClosureCompatReport two = check_closure_compatibility(2, 10, 11);
    CHECK(two.enhancement_match);
    CHECK(two.single_factor_match);
    CHECK(two.pair_twist_pass == 10);
    CHECK(two.scaling_pass == 10);
    CHECK(two.left_twist_pass == 10);
    CHECK(two.all_pass());

    const ClosureCompatReport three = check_closure_compatibility(3, 10, 12);
    CHECK(three.pair_twist_pass == 10);
    CHECK(three.scaling_pass == 10);
    CHECK(three.all_pass());

    CHECK_THROWS_AS(check_closure_compatibility(1, 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(check_closure_compatibility(2, 0, 0), std::invalid_argument);
}

TEST_CASE("total-weight maps commute with the braiding, slot-sensitive ones do not") {
    CHECK(check_weight_commutation());

    // the pair twist itself reads the two slots separately, so it must not
    // commute on its own — the tower needs the full composite
    const EnhancedRMatrix S = build_sl3();
    const WeakConjugacyData d = build_weak_conjugacy_data();
    CHECK(d.gamma.compose(S.R) != S.R.compose(d.gamma));
}

TEST_CASE("closure values transfer across the basis change end to end") {
    CHECK(check_invariant_transfer(braid(1, {})).pass);
    CHECK(check_invariant_transfer(braid(2, {1, 1})).pass);
    CHECK(check_invariant_transfer(braid(3, {1, 2, 1, 2})).pass);
}
