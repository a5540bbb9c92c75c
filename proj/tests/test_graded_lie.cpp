#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "moperad/graded_lie.hpp"

using namespace moperad;

static long witt(long m, long d) {
    auto mobius = [](long n) {
        long res = 1;
        for (long p = 2; p * p <= n; ++p)
            if (n % p == 0) {
                n /= p;
                if (n % p == 0) return 0L;
                res = -res;
            }
        if (n > 1) res = -res;
        return res;
    };
    long s = 0;
    for (long e = 1; e <= d; ++e)
        if (d % e == 0) {
            long pw = 1;
            for (long k = 0; k < d / e; ++k) pw *= m;
            s += mobius(e) * pw;
        }
    return s / d;
}

TEST_CASE("error paths") {
    CHECK_THROWS(GenSymbol::tij(1, 1, 0, 2));          // i == j rejected
    CHECK_THROWS(GenSymbol::t0i(0));                   // frozen name
    auto h1 = t_gamma_handle({1, 2}, 2, 2);
    auto h2 = t_gamma_handle({1, 2}, 3, 2);
    CHECK_THROWS(bracket(h1->gen(0), h2->gen(0)));     // handle mismatch
    CHECK_THROWS(mop_compose_i(h1->gen(0), 0, {3}));   // i = 0
    CHECK_THROWS(mop_compose_i(h1->gen(0), 1, {2}));   // name clash
    CHECK_THROWS(mop_compose_i(h1->gen(0), 1, {}));    // empty inner
    GammaVector bad{3, {{1, 1}}};
    CHECK_THROWS(gamma_act(bad, h1->gen(0)));          // modulus mismatch
    LiePresentation p = free_presentation(2);
    p.relations.emplace_back(1, SparseRow{{0, Rat(1)}});
    CHECK_THROWS(build_algebra(p, 2));                 // degree-1 relation
}

TEST_CASE("deterministic basis independent of construction instance") {
    auto a = build_algebra(t_gamma_presentation({1, 2}, 2), 3);
    auto b = build_algebra(t_gamma_presentation({1, 2}, 2), 3);
    CHECK(a->dims() == b->dims());
    for (int d = 1; d <= 3; ++d)
        for (int p = 0; p < a->dim(d); ++p)
            CHECK(a->basis_free_index(d, p) == b->basis_free_index(d, p));
}

TEST_CASE("free Lie on 2 generators, D=3 dims [2,1,2]") {
    auto h = free_handle(2, 3);
    CHECK(h->dims() == std::vector<int>{2, 1, 2});
}

TEST_CASE("classical t_3 at D=3 has dims [3,1,2]") {
    auto h = t_handle({1, 2, 3}, 3);
    CHECK(h->dims() == std::vector<int>{3, 1, 2});
}

TEST_CASE("t_2^Gamma dims equal center + Witt(N+1,d), N <= 3, d <= 5") {
    for (int N = 1; N <= 3; ++N) {
        auto h = t_gamma_handle({1, 2}, N, 5);
        auto d = h->dims();
        for (int deg = 1; deg <= 5; ++deg) {
            long expect = (deg == 1 ? 1 : 0) + witt(N + 1, deg);
            CHECK(d[deg - 1] == expect);
        }
    }
}

TEST_CASE("t_2^Gamma N=2 D=2 dims [4,3]") {
    auto h = t_gamma_handle({1, 2}, 2, 2);
    CHECK(h->dims() == std::vector<int>{4, 3});
}

TEST_CASE("bracket relations hold in quotients") {
    int N = 2;
    auto h = t_gamma_handle({1, 2, 3}, N, 3);
    // tL: [t_01, t^a_23] = 0
    for (int a = 0; a < N; ++a)
        CHECK(bracket(h->gen(GenSymbol::t0i(1)), h->gen(GenSymbol::tij(2, 3, a, N))).is_zero());
    // t4T: [t^a_12, t^{a+b}_13 + t^b_23] = 0
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            LieElement rhs = h->gen(GenSymbol::tij(1, 3, (a + b) % N, N));
            rhs += h->gen(GenSymbol::tij(2, 3, b, N));
            CHECK(bracket(h->gen(GenSymbol::tij(1, 2, a, N)), rhs).is_zero());
        }
    // antisymmetry on a free algebra: [x, x] = 0
    auto f = free_handle(2, 3);
    CHECK(bracket(f->gen(0), f->gen(0)).is_zero());
}

TEST_CASE("central element of t_2^Gamma") {
    for (int N : {1, 2}) {
        auto h = t_gamma_handle({1, 2}, N, 3);
        LieElement c = central_element(h);
        for (int k = 0; k < h->num_gens(); ++k) CHECK(bracket(c, h->gen(k)).is_zero());
        // N=1 shape: t_01 + t_02 + t^0_12
        if (N == 1) {
            LieElement expect = h->gen(GenSymbol::t0i(1));
            expect += h->gen(GenSymbol::t0i(2));
            expect += h->gen(GenSymbol::tij(1, 2, 0, 1));
            CHECK(c == expect);
        }
    }
}

TEST_CASE("jacobi and antisymmetry exhaustively at small degree") {
    auto h = t_gamma_handle({1, 2}, 2, 4);
    std::vector<LieElement> basis1;
    for (int k = 0; k < h->num_gens(); ++k) basis1.push_back(h->gen(k));
    for (const auto& a : basis1)
        for (const auto& b : basis1) {
            CHECK((bracket(a, b) + bracket(b, a)).is_zero());
            for (const auto& c : basis1) {
                LieElement j = bracket(bracket(a, b), c);
                j += bracket(bracket(b, c), a);
                j += bracket(bracket(c, a), b);
                CHECK(j.is_zero());
            }
        }
}

TEST_CASE("mop_compose_i on generators matches the insertion table") {
    int N = 2;
    auto outer = t_gamma_handle({1, 2}, N, 3);
    // t_01 o_1 {3,4} -> t_03 + t_04 + sum_g t^g_34
    auto img = mop_compose_i(outer->gen(GenSymbol::t0i(1)), 1, {3, 4});
    auto tgt = t_gamma_handle({2, 3, 4}, N, 3);
    LieElement expect = tgt->gen(GenSymbol::t0i(3));
    expect += tgt->gen(GenSymbol::t0i(4));
    for (int g = 0; g < N; ++g) expect += tgt->gen(GenSymbol::tij(3, 4, g, N));
    CHECK(img == expect);
    // t^a_12 o_1 {3,4} -> t^a_32 + t^a_42
    auto img2 = mop_compose_i(outer->gen(GenSymbol::tij(1, 2, 1, N)), 1, {3, 4});
    LieElement expect2 = tgt->gen(GenSymbol::tij(3, 2, 1, N));
    expect2 += tgt->gen(GenSymbol::tij(4, 2, 1, N));
    CHECK(img2 == expect2);
    // untouched generator passes through: t_02 o_1 -> t_02
    auto img3 = mop_compose_i(outer->gen(GenSymbol::t0i(2)), 1, {3, 4});
    CHECK(img3 == tgt->gen(GenSymbol::t0i(2)));
    // inner classical insertion: t_34 -> t^0_34
    auto inner = t_handle({3, 4}, 3);
    auto m = mop_i_inner(inner, tgt);
    m.validate();
    CHECK(m.apply(inner->gen(GenSymbol::tij(3, 4, 0, 1))) == tgt->gen(GenSymbol::tij(3, 4, 0, N)));
}

TEST_CASE("mop_compose_0 on generators") {
    int N = 2;
    auto outer = t_gamma_handle({2}, N, 3);
    auto img = mop_compose_0(outer->gen(GenSymbol::t0i(2)), {1});
    auto tgt = t_gamma_handle({1, 2}, N, 3);
    LieElement expect = tgt->gen(GenSymbol::t0i(2));
    for (int g = 0; g < N; ++g) expect += tgt->gen(GenSymbol::tij(1, 2, g, N));
    CHECK(img == expect);
    // inner part embeds identically
    auto inner = t_gamma_handle({1}, N, 3);
    auto m = mop_0_inner(inner, tgt);
    m.validate();
    CHECK(m.apply(inner->gen(GenSymbol::t0i(1))) == tgt->gen(GenSymbol::t0i(1)));
}

TEST_CASE("insertion maps are Lie morphisms (relations die)") {
    int N = 2;
    auto outer = t_gamma_handle({1, 2}, N, 2);
    auto tgt3 = t_gamma_handle({2, 3, 4}, N, 2);
    CHECK_NOTHROW(mop_i_outer(outer, 1, {3, 4}, tgt3).validate());
    auto tgt4 = t_gamma_handle({1, 2, 3, 4}, N, 2);
    CHECK_NOTHROW(mop_0_outer(t_gamma_handle({3, 4}, N, 2), {1, 2}, tgt4).validate());
}

TEST_CASE("gamma action on generators and group law") {
    int N = 3;
    auto h = t_gamma_handle({1, 2}, N, 2);
    GammaVector g1{N, {{1, 1}}};
    // gamma_1 t_02 = t_02
    CHECK(gamma_act(g1, h->gen(GenSymbol::t0i(2))) == h->gen(GenSymbol::t0i(2)));
    // gamma_1 t^a_12 = t^{a+1}_12
    CHECK(gamma_act(g1, h->gen(GenSymbol::tij(1, 2, 0, N))) == h->gen(GenSymbol::tij(1, 2, 1, N)));
    // gamma on the second index decreases: gamma_2 t^a_12 = t^{a-1}_12
    GammaVector g2{N, {{2, 1}}};
    CHECK(gamma_act(g2, h->gen(GenSymbol::tij(1, 2, 0, N))) ==
          h->gen(GenSymbol::tij(1, 2, N - 1, N)));
    // diagonal acts trivially
    GammaVector diag{N, {{1, 2}, {2, 2}}};
    for (int k = 0; k < h->num_gens(); ++k) CHECK(gamma_act(diag, h->gen(k)) == h->gen(k));
    // additivity
    auto x = h->gen(GenSymbol::tij(1, 2, 1, N));
    CHECK(gamma_act(g1 + g2, x) == gamma_act(g1, gamma_act(g2, x)));
    // automorphism: brackets preserved
    auto a = h->gen(GenSymbol::t0i(1)), b = h->gen(GenSymbol::tij(1, 2, 0, N));
    CHECK(gamma_act(g1, bracket(a, b)) == bracket(gamma_act(g1, a), gamma_act(g1, b)));
}

TEST_CASE("substitute: f_2 -> t_3 sending x,y to t12,t23") {
    auto f2 = free_handle(2, 3);
    auto t3 = t_handle({1, 2, 3}, 3);
    std::vector<LieElement> imgs = {t3->gen(GenSymbol::tij(1, 2, 0, 1)),
                                    t3->gen(GenSymbol::tij(2, 3, 0, 1))};
    auto m = substitution(f2, t3, imgs);
    auto xy = bracket(f2->gen(0), f2->gen(1));
    CHECK(m.apply(xy) == bracket(imgs[0], imgs[1]));
    CHECK_FALSE(m.apply(xy).is_zero());
}

TEST_CASE("epsilon morphism of the center lemma kills t_01") {
    // t_0i -> 0, t^a_ij -> (1/N) t_{i-1,j-1}; the target is the N=1 algebra
    // one arity down, with strand 1 became the new frozen strand
    int N = 2;
    auto src = t_gamma_handle({1, 2, 3}, N, 2);
    auto dst = t_gamma_handle({1, 2}, 1, 2);
    std::vector<LieElement> imgs;
    for (int k = 0; k < src->num_gens(); ++k) {
        auto g = src->pres().gens[k];
        if (g.kind == GenSymbol::T0i) {
            imgs.push_back(dst->zero());
        } else {
            LieElement e = g.i == 1 ? dst->gen(GenSymbol::t0i(g.j - 1))
                                    : dst->gen(GenSymbol::tij(g.i - 1, g.j - 1, 0, 1));
            e *= Rat(1, N);
            imgs.push_back(e);
        }
    }
    auto m = substitution(src, dst, imgs);
    CHECK(m.apply(src->gen(GenSymbol::t0i(1))).is_zero());
    CHECK_FALSE(m.apply(src->gen(GenSymbol::tij(1, 2, 0, N))).is_zero());
}

TEST_CASE("moperad compatibility squares on generators (small arities)") {
    int N = 2, D = 2;
    // square 1: insert classical J at strand j of inner, then compose_0,
    // versus compose_0 then insert at the same strand
    auto outerH = t_gamma_handle({5}, N, D);
    auto innerH = t_gamma_handle({1, 2}, N, D);
    // route A: inner o_2 {3,4} -> t^G_{1,3,4}; then outer o_0 that
    auto innerIns = t_gamma_handle({1, 3, 4}, N, D);
    auto tgt = t_gamma_handle({1, 3, 4, 5}, N, D);
    for (int k = 0; k < innerH->num_gens(); ++k) {
        LieElement a = innerH->gen(k);
        LieElement routeA = mop_0_inner(innerIns, tgt).apply(mop_i_outer(innerH, 2, {3, 4}, innerIns).apply(a));
        LieElement routeB = mop_i_outer(t_gamma_handle({1, 2, 5}, N, D), 2, {3, 4}, tgt)
                                .apply(mop_0_inner(innerH, t_gamma_handle({1, 2, 5}, N, D)).apply(a));
        CHECK(routeA == routeB);
    }
    // square 2: outer-side insertion commutes with compose_0
    for (int k = 0; k < outerH->num_gens(); ++k) {
        LieElement a = outerH->gen(k);
        LieElement routeA = mop_i_outer(t_gamma_handle({1, 2, 5}, N, D), 5, {6, 7}, t_gamma_handle({1, 2, 6, 7}, N, D))
                                .apply(mop_0_outer(outerH, {1, 2}, t_gamma_handle({1, 2, 5}, N, D)).apply(a));
        LieElement routeB = mop_0_outer(t_gamma_handle({6, 7}, N, D), {1, 2}, t_gamma_handle({1, 2, 6, 7}, N, D))
                                .apply(mop_i_outer(outerH, 5, {6, 7}, t_gamma_handle({6, 7}, N, D)).apply(a));
        CHECK(routeA == routeB);
    }
}
