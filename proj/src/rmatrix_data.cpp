#include "knotpoly/rmatrix_data.hpp"

#include <stdexcept>
#include <utility>

namespace knotpoly {

namespace {

using IJ = std::pair<int, int>;

// One entry of a block table: value = r^rk * parse(poly).  A null poly means
// the entry is zero and nothing is stored.
struct BE {
    int rk = 0;
    const char* poly = nullptr;
};

constexpr BE Z{0, nullptr};

BE e(const char* poly) { return BE{0, poly}; }
BE e(int rk, const char* poly) { return BE{rk, poly}; }

// Install a square block of a two-site operator.  idx lists the basis labels
// (i,j) of e_i (x) e_j spanning the block; m[a][b] is the coefficient of the
// output idx[a] in the image of the input idx[b] (rows are outputs).
void add_block(SparseOp& R, CtxPtr ctx, const GaussRational& r,
               const std::vector<IJ>& idx, const std::vector<std::vector<BE>>& m,
               const MultiLaurent* prefactor = nullptr) {
    if (m.size() != idx.size()) throw std::logic_error("block table: row count mismatch");
    for (size_t a = 0; a < idx.size(); ++a) {
        if (m[a].size() != idx.size()) throw std::logic_error("block table: column count mismatch");
        for (size_t b = 0; b < idx.size(); ++b) {
            const BE& be = m[a][b];
            if (be.poly == nullptr) continue;
            MultiLaurent v = MultiLaurent::parse(ctx, be.poly);
            if (be.rk != 0) v = v * r.pow(be.rk);
            if (prefactor) v = v * (*prefactor);
            R.set({idx[a].first, idx[a].second}, {idx[b].first, idx[b].second}, v);
        }
    }
}

// Single basis vector pair on the diagonal: R maps e_i (x) e_j to value * itself.
void add_single(SparseOp& R, CtxPtr ctx, IJ ij, const char* poly) {
    R.set({ij.first, ij.second}, {ij.first, ij.second}, MultiLaurent::parse(ctx, poly));
}

EnhancedRMatrix assemble(std::string name, CtxPtr ctx, SparseOp R, SparseOp h,
                         std::vector<Grading> gradings) {
    EnhancedRMatrix E;
    E.name = std::move(name);
    E.dim = R.dim();
    E.ctx = std::move(ctx);
    E.R_inv = R.invert();
    E.R = std::move(R);
    E.h = std::move(h);
    E.gradings = std::move(gradings);
    return E;
}

}  // namespace

EnhancedRMatrix build_alexander() {
    CtxPtr ctx = VarContext::make({{"t", true}});
    auto p = [&](const char* s) { return MultiLaurent::parse(ctx, s); };

    SparseOp R(2, 2, ctx);
    R.set({1, 1}, {1, 1}, p("t^(-1/2)"));
    R.set({1, 2}, {2, 1}, p("t^(-1/2)"));
    R.set({2, 1}, {1, 2}, p("t^(1/2)"));
    R.set({2, 1}, {2, 1}, p("t^(-1/2) - t^(1/2)"));
    R.set({2, 2}, {2, 2}, p("-t^(1/2)"));

    SparseOp h = SparseOp::diagonal(ctx, {p("t^(1/2)"), p("-t^(1/2)")});

    return assemble("alexander", ctx, std::move(R), std::move(h),
                    {Grading{"degree", {{0}, {1}}}});
}

EnhancedRMatrix build_v1(const GaussRational& r) {
    if (r == GaussRational(0)) throw std::invalid_argument("v1: parameter r must be nonzero");

    CtxPtr ctx = VarContext::make({{"t0", false}, {"t1", false}});

    // Row-major entry list: output pair, input pair, power of r, coefficient.
    struct Quad {
        int r1, r2, c1, c2, rk;
        const char* poly;
    };
    static const Quad entries[] = {
        {1, 1, 1, 1, 0, "-1"},
        {1, 2, 2, 1, 0, "-1"},
        {1, 3, 3, 1, 0, "-1"},
        {1, 4, 4, 1, 0, "-1"},
        {2, 1, 1, 2, 0, "-t0"},
        {2, 1, 2, 1, 0, "t0-1"},
        {2, 2, 2, 2, 0, "t0"},
        {2, 3, 3, 2, -1, "-t1^-1"},
        {2, 3, 4, 1, 0, "t1^-1-1"},
        {2, 4, 4, 2, -1, "t1^-1"},
        {3, 1, 1, 3, 0, "-t1"},
        {3, 1, 3, 1, 0, "t1-1"},
        {3, 2, 2, 3, 1, "-t1"},
        {3, 2, 4, 1, 1, "t1-1"},
        {3, 3, 3, 3, 0, "t1"},
        {3, 4, 4, 3, 1, "t1"},
        {4, 1, 1, 4, 0, "-t0*t1"},
        {4, 1, 2, 3, 0, "(t0-1)*t1"},
        {4, 1, 3, 2, -1, "1-t0"},
        {4, 1, 4, 1, 0, "t0+t1-2"},
        {4, 2, 2, 4, 1, "t0*t1"},
        {4, 2, 4, 2, 0, "t0-1"},
        {4, 3, 3, 4, -1, "1"},
        {4, 3, 4, 3, 0, "t1-1"},
        {4, 4, 4, 4, 0, "-1"},
    };

    SparseOp R(4, 2, ctx);
    for (const Quad& q : entries) {
        MultiLaurent v = MultiLaurent::parse(ctx, q.poly);
        if (q.rk != 0) v = v * r.pow(q.rk);
        R.set({q.r1, q.r2}, {q.c1, q.c2}, v);
    }

    auto c = [&](long n) { return MultiLaurent::constant(ctx, GaussRational(n)); };
    SparseOp h = SparseOp::diagonal(ctx, {c(-1), c(1), c(1), c(-1)});

    EnhancedRMatrix E = assemble("v1", ctx, std::move(R), std::move(h),
                                 {Grading{"deg-e2", {{0}, {1}, {0}, {1}}},
                                  Grading{"deg-e3", {{0}, {0}, {1}, {1}}}});
    if (!(r == GaussRational(1) || r == GaussRational(-1))) {
        E.has_enhancement = false;
        E.enhancement_note = "R-matrix only, no valid enhancement";
    }
    return E;
}

EnhancedRMatrix build_lambda1() {
    CtxPtr ctx = VarContext::make({{"t0", true}, {"t1", true}});
    auto p = [&](const char* s) { return MultiLaurent::parse(ctx, s); };

    struct Quad {
        int r1, r2, c1, c2;
        const char* poly;
    };
    static const Quad entries[] = {
        {1, 1, 1, 1, "1"},
        {1, 2, 2, 1, "1"},
        {1, 3, 3, 1, "1"},
        {1, 4, 4, 1, "1"},
        {2, 1, 1, 2, "t0"},
        {2, 1, 2, 1, "1-t0"},
        {2, 2, 2, 2, "-t0"},
        {2, 3, 3, 2, "t0"},
        {2, 3, 4, 1, "1-t0"},
        {2, 4, 4, 2, "-t0"},
        {3, 1, 1, 3, "t1"},
        {3, 1, 3, 1, "1-t1"},
        {3, 2, 2, 3, "t1"},
        {3, 2, 4, 1, "1-t1"},
        {3, 3, 3, 3, "-t1"},
        {3, 4, 4, 3, "-t1"},
        {4, 1, 1, 4, "t0*t1"},
        {4, 1, 2, 3, "(1-t0)*t1"},
        {4, 1, 3, 2, "t0*(1-t1)"},
        {4, 1, 4, 1, "(1-t0)*(1-t1)"},
        {4, 2, 2, 4, "-t0*t1"},
        {4, 2, 4, 2, "-t0*(1-t1)"},
        {4, 3, 3, 4, "-t0*t1"},
        {4, 3, 4, 3, "-t1*(1-t0)"},
        {4, 4, 4, 4, "t0*t1"},
    };

    // The stored operator is the scaled form: every table value times (t0*t1)^(-1/2).
    MultiLaurent scale = p("t0^(-1/2) * t1^(-1/2)");
    SparseOp R(4, 2, ctx);
    for (const Quad& q : entries)
        R.set({q.r1, q.r2}, {q.c1, q.c2}, MultiLaurent::parse(ctx, q.poly) * scale);

    MultiLaurent hs = p("t0^(1/2) * t1^(1/2)");
    MultiLaurent zero = MultiLaurent::constant(ctx, GaussRational(0));
    SparseOp h = SparseOp::diagonal(ctx, {hs, zero - hs, zero - hs, hs});

    return assemble("lambda1", ctx, std::move(R), std::move(h),
                    {Grading{"first-slot", {{0}, {0}, {1}, {1}}},
                     Grading{"second-slot", {{0}, {1}, {0}, {1}}}});
}

EnhancedRMatrix build_lambda_minus1(const GaussRational& r) {
    if (!(r == GaussRational(1) || r == GaussRational(-1)))
        throw std::invalid_argument("lambda-1: parameter r must be 1 or -1");

    CtxPtr ctx = VarContext::make({{"s", true}, {"t", true}});
    auto p = [&](const char* s) { return MultiLaurent::parse(ctx, s); };

    SparseOp R(8, 2, ctx);

    add_single(R, ctx, {1, 1}, "1");
    add_single(R, ctx, {2, 2}, "-s");
    add_single(R, ctx, {3, 3}, "-t");
    add_single(R, ctx, {6, 6}, "-s^2*t");
    add_single(R, ctx, {7, 7}, "-s*t^2");
    add_single(R, ctx, {8, 8}, "s^2*t^2");

    add_block(R, ctx, r, {{1, 2}, {2, 1}},
              {{Z, e("1")},
               {e("s"), e("1-s")}});
    add_block(R, ctx, r, {{1, 3}, {3, 1}},
              {{Z, e("1")},
               {e("t"), e("1-t")}});
    add_block(R, ctx, r, {{2, 6}, {6, 2}},
              {{Z, e(1, "s")},
               {e(-1, "-s^2*t"), e("-s*(1+s*t)")}});
    add_block(R, ctx, r, {{3, 7}, {7, 3}},
              {{Z, e(-1, "-t")},
               {e(1, "s*t^2"), e("-t*(1+s*t)")}});
    add_block(R, ctx, r, {{6, 8}, {8, 6}},
              {{Z, e(2, "s^2*t")},
               {e(-2, "s^2*t^2"), e("-s^2*t*(1-t)")}});
    add_block(R, ctx, r, {{7, 8}, {8, 7}},
              {{Z, e(-2, "s*t^2")},
               {e(2, "s^2*t^2"), e("-s*t^2*(1-s)")}});

    add_block(R, ctx, r, {{1, 4}, {1, 5}, {2, 3}, {3, 2}, {5, 1}, {4, 1}},
              {{Z, Z, Z, Z, Z, e("1")},
               {Z, Z, Z, Z, e("1"), Z},
               {Z, Z, Z, e(1, "s"), e(1, "1-s"), e("1+s")},
               {Z, Z, e(-1, "-t"), Z, e("1+t"), e(-1, "t-1")},
               {Z, e("t*s"), Z, e("s*(1-t)"), e("1-s"), e(-1, "s*(1-t)")},
               {e("s*t"), Z, e("t*(1-s)"), Z, e(1, "t*(s-1)"), e("1-t")}});

    add_block(R, ctx, r, {{1, 6}, {2, 4}, {2, 5}, {5, 2}, {4, 2}, {6, 1}},
              {{Z, Z, Z, Z, Z, e("1")},
               {Z, Z, Z, Z, e(1, "-s"), e(1, "s-1")},
               {Z, Z, Z, e(1, "-s"), Z, e("1+s")},
               {Z, Z, e(-1, "s*t"), e("-s*(1+t)"), e(-1, "s*(1-t)"), e(-1, "1+s*t")},
               {Z, e(-1, "s*t"), Z, Z, Z, e("1+s*t")},
               {e("s^2*t"), Z, e("t*s*(1-s)"), e(1, "s*t*(s-1)"), e("s*(1-t)"), e("(1-s)*(1+s*t)")}});

    add_block(R, ctx, r, {{1, 7}, {3, 5}, {3, 4}, {4, 3}, {5, 3}, {7, 1}},
              {{Z, Z, Z, Z, Z, e("1")},
               {Z, Z, Z, Z, e(-1, "t"), e(-1, "1-t")},
               {Z, Z, Z, e(-1, "t"), Z, e("1+t")},
               {Z, Z, e(1, "-s*t"), e("-(1+s)*t"), e(1, "t*(s-1)"), e(1, "-(1+s*t)")},
               {Z, e(1, "-s*t"), Z, Z, Z, e("1+s*t")},
               {e("s*t^2"), Z, e("t*s*(1-t)"), e(-1, "t*s*(1-t)"), e("t*(1-s)"), e("(1-t)*(1+s*t)")}});

    add_block(R, ctx, r, {{2, 8}, {5, 6}, {4, 6}, {6, 4}, {6, 5}, {8, 2}},
              {{Z, Z, Z, Z, Z, e(2, "s")},
               {Z, Z, Z, Z, e(-1, "-s*t"), e(-1, "s*(t-1)")},
               {Z, Z, Z, e(-1, "-s*t"), Z, Z},
               {Z, Z, e(1, "s^2*t"), Z, e(1, "s*t*(1-s)"), e(1, "s*t*(s-1)")},
               {Z, e(1, "s^2*t"), Z, Z, e("-s*t*(1+s)"), e("s*(t-1)")},
               {e(-2, "s^2*t^2"), e(1, "s^2*t*(1+t)"), e("s^2*t*(t-1)"), e(-1, "s*t*(1+s*t)"),
                e("-s*t*(1+s*t)"), e("s*(t-1)*(1+s*t)")}});

    add_block(R, ctx, r, {{3, 8}, {4, 7}, {5, 7}, {7, 5}, {7, 4}, {8, 3}},
              {{Z, Z, Z, Z, Z, e(-2, "t")},
               {Z, Z, Z, Z, e(1, "s*t"), e(-1, "t*(s-1)")},
               {Z, Z, Z, e(1, "s*t"), Z, Z},
               {Z, Z, e(-1, "-s*t^2"), Z, e(-1, "s*t*(t-1)"), e(-3, "s*t*(t-1)")},
               {Z, e(-1, "-s*t^2"), Z, Z, e("-s*t*(1+t)"), e(-2, "-t*(s-1)")},
               {e(2, "s^2*t^2"), e(1, "s*t^2*(1+s)"), e(2, "s*t^2*(1-s)"), e(3, "s*t*(1+s*t)"),
                e(2, "s*t*(1+s*t)"), e("t*(s-1)*(1+s*t)")}});

    add_block(R, ctx, r, {{4, 8}, {5, 8}, {6, 7}, {7, 6}, {8, 5}, {8, 4}},
              {{Z, Z, Z, Z, Z, e("s*t")},
               {Z, Z, Z, Z, e("s*t"), Z},
               {Z, Z, Z, e(3, "-s^2*t"), e(1, "s*t*(1-s)"), Z},
               {Z, Z, e(-3, "s*t^2"), Z, Z, e(-3, "s*t*(1-t)")},
               {Z, e("s^2*t^2"), e(-1, "-s*(1+s)*t^2"), e(2, "s^2*t*(t-1)"), e("s^2*t*(t-1)"),
                e(-1, "s*t*(t-1)")},
               {e("s^2*t^2"), Z, e("s*t^2*(1-s)"), e(3, "-s^2*t*(1+t)"), e(1, "s*t*(1-s)"),
                e("s*(s-1)*t^2")}});

    add_block(R, ctx, r,
              {{1, 8}, {2, 7}, {3, 6}, {4, 5}, {4, 4}, {5, 5}, {5, 4}, {6, 3}, {7, 2}, {8, 1}},
              {{Z, Z, Z, Z, Z, Z, Z, Z, Z, e("1")},
               {Z, Z, Z, Z, Z, Z, Z, Z, e(2, "-s"), e("1-s")},
               {Z, Z, Z, Z, Z, Z, Z, e(-2, "-t"), Z, e(-2, "t-1")},
               {Z, Z, Z, Z, Z, Z, e("-s*t"), e(-1, "t*(s+1)"), Z, e(-1, "1-t")},
               {Z, Z, Z, Z, e("-s*t"), Z, Z, e("t*(s-1)"), Z, e("(1-s)*t")},
               {Z, Z, Z, Z, Z, e("-s*t"), Z, Z, e("s*(t-1)"), e(-2, "s*(t-1)")},
               {Z, Z, Z, e("-s*t"), Z, Z, Z, Z, e(1, "-s*(1+t)"), e(-1, "1-s")},
               {Z, Z, e(2, "-s^2*t"), e(1, "-s*t*(s+1)"), Z, e(2, "s*t*(s-1)"), Z, Z,
                e(2, "-s*(1+s*t)"), e("(1-s)*(1+s*t)")},
               {Z, e(-2, "-s*t^2"), Z, Z, e(-2, "s*t*(t-1)"), Z, e(-1, "s*t*(t+1)"),
                e(-2, "-t*(1+s*t)"), Z, e(-2, "(t-1)*(1+s*t)")},
               {e("s^2*t^2"), e("s*t^2*(1-s)"), e(2, "s^2*t*(t-1)"), e(1, "s^2*t*(t-1)"),
                e("s*t*(1-t)"), e(2, "s*t*(s-1)"), e(1, "s*t^2*(s-1)"), e("t*(1-s)*(1+s*t)"),
                e(2, "s*(t-1)*(1+s*t)"), e("(s-1)*(t-1)*(1+s*t)")}});

    // The stored operator is the scaled form: every table value times (s*t)^(-1).
    R = R * p("s^-1 * t^-1");

    MultiLaurent hs = p("s*t");
    MultiLaurent zero = MultiLaurent::constant(ctx, GaussRational(0));
    MultiLaurent nhs = zero - hs;
    SparseOp h = SparseOp::diagonal(ctx, {hs, nhs, nhs, hs, hs, nhs, nhs, hs});

    return assemble("lambda-1", ctx, std::move(R), std::move(h),
                    {Grading{"weight",
                             {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {1, 1}, {2, 1}, {1, 2}, {2, 2}}}});
}

EnhancedRMatrix build_sl3() {
    CtxPtr ctx = VarContext::make({{"t1", false}, {"t2", false}});
    auto p = [&](const char* s) { return MultiLaurent::parse(ctx, s); };
    const GaussRational one(1);

    SparseOp R(8, 2, ctx);

    add_single(R, ctx, {1, 1}, "t1^2*t2^2");
    add_single(R, ctx, {2, 2}, "-t2^2");
    add_single(R, ctx, {3, 3}, "-t1^2");
    add_single(R, ctx, {6, 6}, "-t1^-2");
    add_single(R, ctx, {7, 7}, "-t2^-2");
    add_single(R, ctx, {8, 8}, "t1^-2*t2^-2");

    {
        MultiLaurent pre = p("t2^2");
        add_block(R, ctx, one, {{1, 2}, {2, 1}},
                  {{Z, e("t1")}, {e("t1"), e("t1^2-1")}}, &pre);
    }
    {
        MultiLaurent pre = p("t1^2");
        add_block(R, ctx, one, {{1, 3}, {3, 1}},
                  {{Z, e("t2")}, {e("t2"), e("t2^2-1")}}, &pre);
    }
    {
        MultiLaurent pre = p("-t1^-1*t2");
        add_block(R, ctx, one, {{2, 6}, {6, 2}},
                  {{Z, e("i")}, {e("i"), e("t1*t2 + t1^-1*t2^-1")}}, &pre);
    }
    {
        MultiLaurent pre = p("-t1*t2^-1");
        add_block(R, ctx, one, {{3, 7}, {7, 3}},
                  {{Z, e("i")}, {e("i"), e("t1*t2 + t1^-1*t2^-1")}}, &pre);
    }
    {
        MultiLaurent pre = p("-t1^-2");
        add_block(R, ctx, one, {{6, 8}, {8, 6}},
                  {{Z, e("t2^-1")}, {e("t2^-1"), e("1-t2^-2")}}, &pre);
    }
    {
        MultiLaurent pre = p("-t2^-2");
        add_block(R, ctx, one, {{7, 8}, {8, 7}},
                  {{Z, e("t1^-1")}, {e("t1^-1"), e("1-t1^-2")}}, &pre);
    }

    add_block(R, ctx, one, {{1, 4}, {1, 5}, {2, 3}, {3, 2}, {5, 1}, {4, 1}},
              {{Z, Z, Z, Z, Z, e("t1*t2")},
               {Z, Z, Z, Z, e("t1*t2"), Z},
               {Z, Z, Z, e("-i*t1*t2"), e("i*t2*(1-t1^2)"), e("t2*(t1^2+1)")},
               {Z, Z, e("-i*t1*t2"), Z, e("t1*(t2^2+1)"), e("i*t1*(1-t2^2)")},
               {Z, e("t1*t2"), Z, e("t1*(t2^2-1)"), e("t2^2*(t1^2-1)"), e("i*(t2^2-1)")},
               {e("t1*t2"), Z, e("t2*(t1^2-1)"), Z, e("i*(t1^2-1)"), e("t1^2*(t2^2-1)")}});

    add_block(R, ctx, one, {{1, 6}, {2, 4}, {2, 5}, {5, 2}, {4, 2}, {6, 1}},
              {{Z, Z, Z, Z, Z, e("t2")},
               {Z, Z, Z, Z, e("i*t2"), e("i*t2*(t1-t1^-1)")},
               {Z, Z, Z, e("i*t2"), Z, e("t2*(t1+t1^-1)")},
               {Z, Z, e("i*t2"), e("-(t2^2+1)"), e("i*(t2^2-1)"), e("i*(t1*t2^2+t1^-1)")},
               {Z, e("i*t2"), Z, Z, Z, e("t1*t2^2+t1^-1")},
               {e("t2"), Z, e("t2*(t1-t1^-1)"), e("i*(t1-t1^-1)"), e("t1*(t2^2-1)"),
                e("(t2^2+t1^-2)*(t1^2-1)")}});

    add_block(R, ctx, one, {{1, 7}, {3, 5}, {3, 4}, {4, 3}, {5, 3}, {7, 1}},
              {{Z, Z, Z, Z, Z, e("t1")},
               {Z, Z, Z, Z, e("i*t1"), e("i*t1*(t2-t2^-1)")},
               {Z, Z, Z, e("i*t1"), Z, e("t1*(t2+t2^-1)")},
               {Z, Z, e("i*t1"), e("-(t1^2+1)"), e("i*(t1^2-1)"), e("i*(t1^2*t2+t2^-1)")},
               {Z, e("i*t1"), Z, Z, Z, e("t1^2*t2+t2^-1")},
               {e("t1"), Z, e("t1*(t2-t2^-1)"), e("i*(t2-t2^-1)"), e("t2*(t1^2-1)"),
                e("(t1^2+t2^-2)*(t2^2-1)")}});

    add_block(R, ctx, one, {{2, 8}, {5, 6}, {4, 6}, {6, 4}, {6, 5}, {8, 2}},
              {{Z, Z, Z, Z, Z, e("-t1^-1")},
               {Z, Z, Z, Z, e("-i*t1^-1"), e("i*t1^-1*(t2^-1-t2)")},
               {Z, Z, Z, e("-i*t1^-1"), Z, Z},
               {Z, Z, e("-i*t1^-1"), Z, e("i*(t1^-2-1)"), e("i*t2^-1*(1-t1^-2)")},
               {Z, e("-i*t1^-1"), Z, Z, e("-(1+t1^-2)"), e("t2^-1-t2")},
               {e("-t1^-1"), e("-i*t1^-1*(t2^-1+t2)"), e("t1^-1*(t2^-1-t2)"),
                e("i*(t1^-2*t2^-1+t2)"), e("-(t1^-2*t2^-1+t2)"),
                e("(1+t1^-2*t2^-2)*(1-t2^2)")}});

    add_block(R, ctx, one, {{3, 8}, {4, 7}, {5, 7}, {7, 5}, {7, 4}, {8, 3}},
              {{Z, Z, Z, Z, Z, e("-t2^-1")},
               {Z, Z, Z, Z, e("-i*t2^-1"), e("i*t2^-1*(t1^-1-t1)")},
               {Z, Z, Z, e("-i*t2^-1"), Z, Z},
               {Z, Z, e("-i*t2^-1"), Z, e("i*(t2^-2-1)"), e("i*t1^-1*(1-t2^-2)")},
               {Z, e("-i*t2^-1"), Z, Z, e("-t2^-2*(t2^2+1)"), e("t1^-1-t1")},
               {e("-t2^-1"), e("-i*t2^-1*(t1^-1+t1)"), e("t2^-1*(t1^-1-t1)"),
                e("i*(t1^-1*t2^-2+t1)"), e("-(t1^-1*t2^-2+t1)"),
                e("(1+t1^-2*t2^-2)*(1-t1^2)")}});

    add_block(R, ctx, one, {{4, 8}, {5, 8}, {6, 7}, {7, 6}, {8, 5}, {8, 4}},
              {{Z, Z, Z, Z, Z, e("t1^-1*t2^-1")},
               {Z, Z, Z, Z, e("t1^-1*t2^-1"), Z},
               {Z, Z, Z, e("-i*t1^-1*t2^-1"), e("i*t2^-1*(t1^-2-1)"), Z},
               {Z, Z, e("-i*t1^-1*t2^-1"), Z, Z, e("i*t1^-1*(t2^-2-1)")},
               {Z, e("t1^-1*t2^-1"), e("-i*t2^-1*(t1^-2+1)"), e("t1^-1*(1-t2^-2)"),
                e("t1^-2*(t2^-2-1)"), e("i*(t2^-2-1)")},
               {e("t1^-1*t2^-1"), Z, e("t2^-1*(1-t1^-2)"), e("-i*t1^-1*(t2^-2+1)"),
                e("i*(t1^-2-1)"), e("(t1^-2-1)*t2^-2")}});

    add_block(R, ctx, one,
              {{1, 8}, {2, 7}, {3, 6}, {4, 5}, {4, 4}, {5, 5}, {5, 4}, {6, 3}, {7, 2}, {8, 1}},
              {{Z, Z, Z, Z, Z, Z, Z, Z, Z, e("1")},
               {Z, Z, Z, Z, Z, Z, Z, Z, e("1"), e("t1-t1^-1")},
               {Z, Z, Z, Z, Z, Z, Z, e("1"), Z, e("t2-t2^-1")},
               {Z, Z, Z, Z, Z, Z, e("-1"), e("i*(t1+t1^-1)"), Z, e("i*t1*(t2-t2^-1)")},
               {Z, Z, Z, Z, e("-1"), Z, Z, e("t1^-1-t1"), Z, e("t2^-1*(t1-t1^-1)")},
               {Z, Z, Z, Z, Z, e("-1"), Z, Z, e("t2^-1-t2"), e("t1^-1*(t2-t2^-1)")},
               {Z, Z, Z, e("-1"), Z, Z, Z, Z, e("i*(t2+t2^-1)"), e("i*t2*(t1-t1^-1)")},
               {Z, Z, e("1"), e("i*(t1+t1^-1)"), Z, e("t1-t1^-1"), Z, Z,
                e("t1*t2+t1^-1*t2^-1"), e("(t1*t2+t1^-1*t2^-1)*(t1-t1^-1)")},
               {Z, e("1"), Z, Z, e("t2-t2^-1"), Z, e("i*(t2+t2^-1)"),
                e("t1*t2+t1^-1*t2^-1"), Z, e("(t1*t2+t1^-1*t2^-1)*(t2-t2^-1)")},
               {e("1"), e("t1-t1^-1"), e("t2-t2^-1"), e("i*t1^-1*(t2-t2^-1)"),
                e("t1*(t2-t2^-1)"), e("t2*(t1-t1^-1)"), e("i*t2^-1*(t1-t1^-1)"),
                e("(t1*t2+t1^-1*t2^-1)*(t1-t1^-1)"),
                e("(t1*t2+t1^-1*t2^-1)*(t2-t2^-1)"),
                e("(t1-t1^-1)*(t2-t2^-1)*(t1*t2+t1^-1*t2^-1)")}});

    MultiLaurent hs = p("t1^-2*t2^-2");
    MultiLaurent zero = MultiLaurent::constant(ctx, GaussRational(0));
    MultiLaurent nhs = zero - hs;
    SparseOp h = SparseOp::diagonal(ctx, {hs, nhs, nhs, hs, hs, nhs, nhs, hs});

    return assemble("sl3", ctx, std::move(R), std::move(h),
                    {Grading{"weight",
                             {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {1, 1}, {2, 1}, {1, 2}, {2, 2}}}});
}

std::vector<std::string> catalog_matrix_names() {
    return {"alexander", "v1", "lambda1", "lambda-1", "sl3"};
}

EnhancedRMatrix build_catalog_matrix(const std::string& name) {
    if (name == "alexander") return build_alexander();
    if (name == "v1") return build_v1(GaussRational(1));
    if (name == "lambda1") return build_lambda1();
    if (name == "lambda-1") return build_lambda_minus1(GaussRational(1));
    if (name == "sl3") return build_sl3();
    throw std::invalid_argument("unknown matrix name: " + name);
}

}  // namespace knotpoly
