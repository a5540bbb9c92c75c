#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "moperad/solver.hpp"

using namespace moperad;

TEST_CASE("associator solve at mu=1: known degree-2 coefficient") {
    auto res = solve_associator(Rat(1), 4);
    REQUIRE_FALSE(res.report.obstructed);
    CHECK(res.report.certified_degree == 4);
    LieElement lp = uea_log(res.tuple.phi);
    // degree-1 part is forced to zero
    CHECK(lp.coords.count(1) == 0);
    // |coefficient of [x,y]| = 1/24
    REQUIRE(lp.coords.count(2) == 1);
    REQUIRE(lp.coords[2].size() == 1);
    Rat c = lp.coords[2][0].second;
    CHECK((c == Rat(1, 24) || c == Rat(-1, 24)));
    TorsorContext cx = TorsorContext::make(1, 4);
    CHECK(validate_assoc(cx, res.tuple).pass);
}

TEST_CASE("mu scales the solution quadratically at degree 2") {
    auto r1 = solve_associator(Rat(1), 2);
    auto r2 = solve_associator(Rat(3), 2);
    Rat c1 = uea_log(r1.tuple.phi).coords[2][0].second;
    Rat c2 = uea_log(r2.tuple.phi).coords[2][0].second;
    CHECK(c2 == Rat(9) * c1);
}

TEST_CASE("determinism: identical inputs give identical representatives") {
    auto a = solve_associator(Rat(1), 3);
    auto b = solve_associator(Rat(1), 3);
    CHECK(a.tuple.phi == b.tuple.phi);
    auto ca = solve_cyclotomic(a.tuple, 2, 3);
    auto cb = solve_cyclotomic(b.tuple, 2, 3);
    CHECK(ca.tuple.psi == cb.tuple.psi);
}

TEST_CASE("cyclotomic solve validates for N = 1, 2, 3") {
    auto base = solve_associator(Rat(1), 3);
    for (int N : {1, 2, 3}) {
        auto res = solve_cyclotomic(base.tuple, N, 3);
        REQUIRE_FALSE(res.report.obstructed);
        CHECK(res.report.certified_degree == 3);
        TorsorContext cx = TorsorContext::make(N, 3);
        auto rep = validate_cycassoc(cx, res.tuple);
        CHECK(rep.pass);
        // re-validation reproduces the certified degree (idempotent certification)
        CHECK(res.report.certified_degree == 3);
    }
}

TEST_CASE("N=1 solution has the phi-shape of the epsilon-projection lemma") {
    // psi(t01, t12) = phi(t01, t12) e^{s t12}; the canonical representative
    // picks s = 0, so log psi = log phi under x -> t01, y -> t12
    int D = 3;
    auto base = solve_associator(Rat(1), D);
    auto res = solve_cyclotomic(base.tuple, 1, D);
    REQUIRE_FALSE(res.report.obstructed);
    TorsorContext cx = TorsorContext::make(1, D);
    UeaElement expected = group_substitute(
        base.tuple.phi.truncated(D), cx.fN1,
        {uea_exp(cx.fN1->gen(0), D), uea_exp(cx.fN1->gen(1), D)});
    CHECK(res.tuple.psi == expected);
}

TEST_CASE("degree-1 part of log psi solves the octogon balance") {
    // for the canonical representative at N=2 the degree-1 part vanishes;
    // verify it satisfies the octogon at degree 1 by direct residual
    auto base = solve_associator(Rat(1), 3);
    auto res = solve_cyclotomic(base.tuple, 2, 3);
    TorsorContext cx = TorsorContext::make(2, 3);
    UeaElement r = octogon_residual(cx, res.tuple);
    CHECK(r.is_zero());
}

TEST_CASE("gauge consistency: two solutions differ by a right gauge") {
    // build a second solution by acting with a nontrivial valid gauge and
    // recover the gauge degree-by-degree
    int N = 2, D = 3;
    TorsorContext cx = TorsorContext::make(N, D);
    auto t = solve_cyclotomic(solve_associator(Rat(1), D).tuple, N, D).tuple;
    auto t2full = solve_cyclotomic(solve_associator(Rat(2), D).tuple, N, D).tuple;
    auto g12 = grtgamma_between(cx, t, t2full);
    REQUIRE(g12.has_value());
    // a gauge with lambda = 1: conjugate two moves to get a same-base pair
    auto back = grtgamma_between(cx, t2full, t);
    REQUIRE(back.has_value());
    auto loop = grtgamma_compose(cx, *g12, *back);
    CHECK(loop.lambda == 1);
    auto t_alt = act_cycassoc_grtgamma(cx, t, loop);
    CHECK(t_alt.base.phi == t.base.phi);
    auto h = gauge_between(cx, t, t_alt);
    REQUIRE(h.has_value());
    GRTGammaElement hg{Rat(1), uea_one(cx.f2, D), *h, N};
    auto moved = act_cycassoc_grtgamma(cx, t, hg);
    CHECK(moved.psi == t_alt.psi);
}

TEST_CASE("freeness probe: stabilizers are trivial") {
    int D = 3;
    auto base = solve_associator(Rat(1), D);
    TorsorContext cx1 = TorsorContext::make(1, D);
    CHECK(gt_stabilizer_nullity(cx1, base.tuple) == 0);
    for (int N : {1, 2}) {
        TorsorContext cx = TorsorContext::make(N, D);
        auto t = solve_cyclotomic(base.tuple, N, D).tuple;
        CHECK(gtm_stabilizer_nullity(cx, t) == 0);
    }
}

TEST_CASE("an invalid base produces an obstruction report, not a crash") {
    // a junk "associator" whose hexagon fails makes the cyclotomic system
    // inconsistent at some degree; the report carries the dumped system
    int D = 3;
    TorsorContext cx = TorsorContext::make(2, D);
    std::mt19937 rng(1);
    AssocTuple junk{Rat(1), random_grouplike(cx.f2, D, rng)};
    auto res = solve_cyclotomic(junk, 2, D);
    CHECK(res.report.obstructed);
    CHECK(res.report.obstruction_degree >= 1);
    CHECK_FALSE(res.report.obstruction_detail.empty());
}

TEST_CASE("torsor division round trips") {
    int D = 3;
    TorsorContext cx = TorsorContext::make(1, D);
    auto t1 = solve_associator(Rat(1), D).tuple;
    auto t2 = solve_associator(Rat(5), D).tuple;
    auto a = gt_between(cx, t1, t2);
    REQUIRE(a.has_value());
    auto moved = act_gt_on_assoc(cx, *a, t1);
    CHECK(moved.phi == t2.phi);
    CHECK(moved.mu == t2.mu);
    CHECK(validate_gt(cx, *a, &t1).pass);
}
