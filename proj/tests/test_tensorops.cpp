#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knotpoly/sparse_op.hpp"

#include <random>

using namespace knotpoly;

namespace {

CtxPtr ctx_t() { return VarContext::make({{"t", true}}); }

MultiLaurent P(CtxPtr ctx, const std::string& s) { return MultiLaurent::parse(std::move(ctx), s); }

// dim-2 crossing operator: the matrix with rows as outputs
//   v0v0 -> t^(-1/2) v0v0,  v0v1 -> t^(1/2) v1v0,
//   v1v0 -> t^(-1/2) v0v1 + (t^(-1/2)-t^(1/2)) v1v0,  v1v1 -> -t^(1/2) v1v1.
SparseOp crossing(CtxPtr ctx) {
    SparseOp R(2, 2, ctx);
    R.set({1, 1}, {1, 1}, P(ctx, "t^(-1/2)"));
    R.set({2, 1}, {1, 2}, P(ctx, "t^(1/2)"));
    R.set({1, 2}, {2, 1}, P(ctx, "t^(-1/2)"));
    R.set({2, 1}, {2, 1}, P(ctx, "t^(-1/2) - t^(1/2)"));
    R.set({2, 2}, {2, 2}, P(ctx, "-t^(1/2)"));
    return R;
}

SparseOp weight_op(CtxPtr ctx) {
    return SparseOp::diagonal(ctx, {P(ctx, "t^(1/2)"), P(ctx, "-t^(1/2)")});
}

SparseOp random_op(size_t dim, size_t arity, CtxPtr ctx, std::mt19937_64& rng) {
    auto ri = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1)); };
    SparseOp op(dim, arity, ctx);
    uint64_t fd = op.flat_dim();
    int n = ri(1, static_cast<int>(2 * fd));
    for (int k = 0; k < n; ++k) {
        uint64_t r = rng() % fd, c = rng() % fd;
        std::vector<int> exps(ctx->size());
        for (auto& e : exps) e = ri(-2, 2);
        op.set_flat(r, c, op.at_flat(r, c) + MultiLaurent::monomial(ctx, GaussRational(ri(-3, 3), 0), exps));
    }
    return op;
}

} // namespace

TEST_CASE("flattening is row-major, leftmost factor most significant") {
    CHECK(SparseOp::flatten({1, 1}, 2) == 0);
    CHECK(SparseOp::flatten({1, 2}, 2) == 1);
    CHECK(SparseOp::flatten({2, 1}, 2) == 2);
    CHECK(SparseOp::flatten({3, 1, 2}, 4) == 2 * 16 + 0 * 4 + 1);
    CHECK(SparseOp::unflatten(33, 4, 3) == std::vector<int>{3, 1, 2});
    CHECK_THROWS_AS(SparseOp::flatten({0, 1}, 2), std::out_of_range);
    CHECK_THROWS_AS(SparseOp::flatten({1, 3}, 2), std::out_of_range);
}

TEST_CASE("composition") {
    auto ctx = ctx_t();
    auto R = crossing(ctx);
    auto id2 = SparseOp::identity(2, 2, ctx);
    CHECK(id2.compose(R) == R);
    CHECK(R.compose(id2) == R);

    auto h = weight_op(ctx);
    auto t_id = SparseOp::identity(2, 1, ctx) * P(ctx, "t");
    CHECK(h.compose(h) == t_id);

    CHECK(R.compose(R.invert()) == id2);
    CHECK(R.invert().compose(R) == id2);

    CHECK_THROWS_AS((void)R.compose(h), std::invalid_argument);
}

TEST_CASE("tensor products") {
    auto ctx = ctx_t();
    auto id1 = SparseOp::identity(2, 1, ctx);
    CHECK(id1.tensor(id1) == SparseOp::identity(2, 2, ctx));

    auto a = SparseOp::diagonal(ctx, {P(ctx, "t"), P(ctx, "2")});
    auto b = SparseOp::diagonal(ctx, {P(ctx, "t^-1"), P(ctx, "3")});
    auto ab = a.tensor(b);
    CHECK(ab.at({1, 1}, {1, 1}) == P(ctx, "1"));
    CHECK(ab.at({1, 2}, {1, 2}) == P(ctx, "3*t"));
    CHECK(ab.at({2, 1}, {2, 1}) == P(ctx, "2*t^-1"));
    CHECK(ab.at({2, 2}, {2, 2}) == P(ctx, "6"));

    auto h = weight_op(ctx);
    auto hh = h.tensor(h);
    CHECK(hh == SparseOp::from_rows(2, 2, ctx,
                                    {{P(ctx, "t"), P(ctx, "0"), P(ctx, "0"), P(ctx, "0")},
                                     {P(ctx, "0"), P(ctx, "-t"), P(ctx, "0"), P(ctx, "0")},
                                     {P(ctx, "0"), P(ctx, "0"), P(ctx, "-t"), P(ctx, "0")},
                                     {P(ctx, "0"), P(ctx, "0"), P(ctx, "0"), P(ctx, "t")}}));
}

TEST_CASE("two-site embeddings") {
    auto ctx = ctx_t();
    auto id2 = SparseOp::identity(2, 2, ctx);
    CHECK(id2.embed_two_site(1, 2, 3) == SparseOp::identity(2, 3, ctx));

    auto R = crossing(ctx);
    CHECK(R.embed_two_site(1, 2, 2) == R);

    // swap on factors 1 and 3 of a 3-fold product sends e1⊗e2⊗e3 to e3⊗e2⊗e1
    auto ctx3 = VarContext::make({{"t", true}});
    SparseOp swap(3, 2, ctx3);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) swap.set({j, i}, {i, j}, MultiLaurent::constant(ctx3, GaussRational(1)));
    auto emb = swap.embed_two_site(1, 3, 3);
    CHECK(emb.at({3, 2, 1}, {1, 2, 3}) == MultiLaurent::constant(ctx3, GaussRational(1)));
    CHECK(emb.at({1, 2, 3}, {1, 2, 3}).is_zero());

    CHECK_THROWS_AS((void)R.embed_two_site(2, 2, 3), std::out_of_range);
    CHECK_THROWS_AS((void)R.embed_two_site(1, 4, 3), std::out_of_range);
}

TEST_CASE("partial traces") {
    auto ctx = ctx_t();
    auto id2 = SparseOp::identity(2, 2, ctx);
    CHECK(id2.partial_trace(2) == SparseOp::identity(2, 1, ctx) * P(ctx, "2"));
    CHECK(id2.partial_trace(1) == SparseOp::identity(2, 1, ctx) * P(ctx, "2"));

    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = random_op(2, 1, ctx, rng);
        auto g = random_op(2, 1, ctx, rng);
        CHECK(f.tensor(g).partial_trace(2) == f * g.trace());
        CHECK(f.tensor(g).partial_trace(1) == g * f.trace());
        auto big = random_op(2, 3, ctx, rng);
        for (size_t i = 1; i <= 3; ++i) CHECK(big.partial_trace(i).trace() == big.trace());
    }

    // tr₂((id⊗h)∘R^{±1}) = id: the partial-trace normalization of the crossing
    auto R = crossing(ctx);
    auto h = weight_op(ctx);
    auto idh = SparseOp::identity(2, 1, ctx).tensor(h);
    CHECK(idh.compose(R).partial_trace(2) == SparseOp::identity(2, 1, ctx));
    CHECK(idh.compose(R.invert()).partial_trace(2) == SparseOp::identity(2, 1, ctx));

    CHECK_THROWS_AS((void)R.partial_trace(0), std::out_of_range);
    CHECK_THROWS_AS((void)R.partial_trace(3), std::out_of_range);
}

TEST_CASE("index rotations") {
    auto ctx = ctx_t();
    auto id2 = SparseOp::identity(2, 2, ctx);
    auto rl = id2.rot_left();
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) CHECK(rl.at({j, j}, {i, i}) == MultiLaurent::constant(ctx, GaussRational(1)));
    CHECK(rl.entry_count() == 4);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_op(2, 2, ctx, rng);
        CHECK(a.rot_left().rot_right() == a);
        CHECK(a.rot_right().rot_left() == a);
        CHECK(a.rot_left().entry_count() == a.entry_count());
    }

    CHECK_THROWS_AS((void)random_op(2, 3, ctx, rng).rot_left(), std::invalid_argument);
}

TEST_CASE("rotation composite returns the identity for the crossing pair") {
    // Golden check pinning the rotation conventions: with R the crossing and
    // h its weight operator,
    //   rot_left(R⁻¹) ∘ rot_right((id⊗h) ∘ R ∘ (h⁻¹⊗id)) = id on V⊗V.
    auto ctx = ctx_t();
    auto R = crossing(ctx);
    auto h = weight_op(ctx);
    auto id1 = SparseOp::identity(2, 1, ctx);
    auto lhs = R.invert().rot_left();
    auto rhs = id1.tensor(h).compose(R).compose(h.invert().tensor(id1)).rot_right();
    CHECK(lhs.compose(rhs) == SparseOp::identity(2, 2, ctx));
    CHECK(rhs.compose(lhs) == SparseOp::identity(2, 2, ctx));
}

TEST_CASE("scalar-multiple-of-identity detection") {
    auto ctx = ctx_t();
    auto id1 = SparseOp::identity(2, 1, ctx);
    auto three = id1 * P(ctx, "3");
    auto got = three.as_scalar_multiple_of_identity();
    REQUIRE(got.has_value());
    CHECK(*got == P(ctx, "3"));

    CHECK(!SparseOp::diagonal(ctx, {P(ctx, "1"), P(ctx, "2")}).as_scalar_multiple_of_identity().has_value());
    auto zero = SparseOp(2, 1, ctx).as_scalar_multiple_of_identity();
    REQUIRE(zero.has_value());
    CHECK(zero->is_zero());

    auto offdiag = SparseOp(2, 1, ctx);
    offdiag.set({1}, {2}, P(ctx, "1"));
    CHECK(!offdiag.as_scalar_multiple_of_identity().has_value());

    auto partial = SparseOp(2, 1, ctx);
    partial.set({1}, {1}, P(ctx, "1"));
    CHECK(!partial.as_scalar_multiple_of_identity().has_value());

    auto lam = (SparseOp::identity(2, 2, ctx) * P(ctx, "t^(-1/2) - t^(1/2)")).as_scalar_multiple_of_identity();
    REQUIRE(lam.has_value());
    CHECK(*lam == P(ctx, "t^(-1/2) - t^(1/2)"));
}

TEST_CASE("inversion") {
    auto ctx = ctx_t();
    auto id2 = SparseOp::identity(2, 2, ctx);
    CHECK(id2.invert() == id2);

    auto h = weight_op(ctx);
    CHECK(h.invert() == SparseOp::diagonal(ctx, {P(ctx, "t^(-1/2)"), P(ctx, "-t^(-1/2)")}));

    // crossing satisfies R - R⁻¹ = (t^(-1/2) - t^(1/2))·id
    auto R = crossing(ctx);
    CHECK(R - R.invert() == id2 * P(ctx, "t^(-1/2) - t^(1/2)"));

    // dense block requiring elimination
    SparseOp u(2, 1, ctx);
    u.set({1}, {1}, P(ctx, "1"));
    u.set({1}, {2}, P(ctx, "1 + t"));
    u.set({2}, {2}, P(ctx, "1"));
    auto uinv = u.invert();
    CHECK(u.compose(uinv) == SparseOp::identity(2, 1, ctx));
    CHECK(uinv.at({1}, {2}) == P(ctx, "-1 - t"));

    SparseOp sing(2, 1, ctx);
    sing.set({1}, {1}, P(ctx, "1"));
    sing.set({2}, {1}, P(ctx, "1"));
    CHECK_THROWS_AS((void)sing.invert(), std::domain_error);
    CHECK_THROWS_AS((void)SparseOp(2, 1, ctx).invert(), std::domain_error);

    // inverse exists over fractions but not over Laurent polynomials
    SparseOp nl(2, 1, ctx);
    nl.set({1}, {1}, P(ctx, "1"));
    nl.set({1}, {2}, P(ctx, "1"));
    nl.set({2}, {1}, P(ctx, "1"));
    nl.set({2}, {2}, P(ctx, "t"));
    CHECK_THROWS_AS((void)nl.invert(), std::domain_error);
}

TEST_CASE("algebraic laws on random operands") {
    auto ctx = ctx_t();
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 15; ++trial) {
        auto a = random_op(2, 2, ctx, rng), b = random_op(2, 2, ctx, rng), c = random_op(2, 2, ctx, rng);
        CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
        auto d = random_op(2, 1, ctx, rng), e = random_op(2, 1, ctx, rng);
        CHECK(a.tensor(d).tensor(e) == a.tensor(d.tensor(e)));
        // interchange law: (a⊗b)∘(c⊗d) = (a∘c)⊗(b∘d)
        auto f = random_op(2, 1, ctx, rng);
        CHECK(d.tensor(e).compose(e.tensor(f)) == d.compose(e).tensor(e.compose(f)));
    }
}

TEST_CASE("reshaping between factorizations of the same space") {
    auto ctx = ctx_t();
    auto R = crossing(ctx);
    auto flat = R.reshaped(4, 1);
    CHECK(flat.dim() == 4);
    CHECK(flat.at({2}, {3}) == R.at({1, 2}, {2, 1}));
    CHECK(flat.reshaped(2, 2) == R);
    CHECK_THROWS_AS((void)R.reshaped(3, 1), std::invalid_argument);
}

TEST_CASE("operator JSON round-trip") {
    auto ctx = ctx_t();
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 10; ++trial) {
        auto a = random_op(2, 2, ctx, rng);
        CHECK(SparseOp::from_json(ctx, a.to_json()) == a);
    }
    auto R = crossing(ctx);
    auto j = R.to_json();
    CHECK(j.find("\"dim\":2") != std::string::npos);
    CHECK(SparseOp::from_json(ctx, j) == R);
}
