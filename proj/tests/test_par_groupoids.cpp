#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "moperad/par_groupoids.hpp"

using namespace moperad;

TEST_CASE("object parsing, printing, composition") {
    ParObject o = parse_object("((0 1_0) 2_1)", 2);
    CHECK(o.leaves() == std::vector<int>{0, 1, 2});
    CHECK(o.labels.at(1) == 0);
    CHECK(o.labels.at(2) == 1);
    CHECK(parse_object(o.str(), 2) == o);
    // worked examples of partial composition
    // (02_a)1_b o_2 (12)3 = (0((2_a 3_a) 4_a)) 1_b  with a=1,b=0, N=2
    ParObject outer = parse_object("(0 2_1) 1_0", 2);
    ParObject inner = parse_object("(1 2) 3", 0);
    ParObject got = obj_compose_i(outer, 2, inner);
    CHECK(got == parse_object("(0 ((2_1 3_1) 4_1)) 1_0", 2));
    // (02_a)1_b o_0 (02_c)1_d = (((02_c)1_d) 4_a) 3_b
    ParObject inner0 = parse_object("(0 2_0) 1_1", 2);
    ParObject got0 = obj_compose_0(outer, inner0);
    CHECK(got0 == parse_object("(((0 2_0) 1_1) 4_1) 3_0", 2));
    // unit: insert a single leaf
    ParObject unit = obj_compose_i(outer, 2, parse_object("1", 0));
    CHECK(unit == parse_object("(0 2_1) 1_0", 2));
}

TEST_CASE("generator endpoints") {
    // Psi on (01)2 -> 0(12)
    MorWord psi = generator(Head::Psi, parse_object("(01)2", 0), {{0}, {1}, {2}});
    CHECK(psi.target == parse_object("0(12)", 0));
    // E^{0,1_0} on 01_0 -> 01_1 (N=2)
    MorWord e = generator(Head::E, parse_object("0 1_0", 2), {{0}, {1}});
    CHECK(e.target == parse_object("0 1_1", 2));
    // R^{1,2} on (12) -> (21)
    MorWord r = generator(Head::R, parse_object("1 2", 0), {{1}, {2}});
    CHECK(r.target == parse_object("2 1", 0));
}

TEST_CASE("compose and invert") {
    MorWord psi = generator(Head::Psi, parse_object("(01)2", 0), {{0}, {1}, {2}});
    MorWord round = compose(psi, invert(psi));
    CHECK(equal_morphisms(round, identity_word(psi.source)));
    // E then E^{-1}
    MorWord e = generator(Head::E, parse_object("(01)2", 0), {{0}, {1}});
    CHECK(equal_morphisms(compose(e, invert(e)), identity_word(e.source)));
    // (E^{0,1})^{(N)} wraps labels back at N=3
    int N = 3;
    ParObject ob = parse_object("0 1_0", N);
    MorWord w = identity_word(ob);
    for (int k = 0; k < N; ++k) w = compose(w, generator(Head::E, w.target, {{0}, {1}}));
    CHECK(w.target == ob);
    CHECK_FALSE(equal_morphisms(w, identity_word(ob)));  // freeness: E^{(N)} != id
}

TEST_CASE("evaluation to braids") {
    // Phi -> identity braid
    MorWord phi = generator(Head::Phi, parse_object("(12)3", 0), {{1}, {2}, {3}});
    CHECK(evaluate_to_braid(phi).empty());
    // E^{0,1} -> sigma_1^2 (= x_01 with strand 0 leftmost)
    MorWord e = generator(Head::E, parse_object("0 1", 0), {{0}, {1}});
    CHECK(equal(evaluate_to_braid(e), elementary_pure(1, 2, 2)));
    // R^{1,2} -> sigma_1
    MorWord r = generator(Head::R, parse_object("1 2", 0), {{1}, {2}});
    CHECK(equal(evaluate_to_braid(r), BraidWord(2, {{1, 1}})));
    // functor: evaluate(ab) = evaluate(a) evaluate(b)
    MorWord psi = generator(Head::Psi, parse_object("(01)2", 0), {{0}, {1}, {2}});
    MorWord w = compose(psi, generator(Head::E, psi.target, {{0}, {1, 2}}));
    CHECK(equal(evaluate_to_braid(w), evaluate_to_braid(psi) * evaluate_to_braid(w) /*id * w*/));
}

TEST_CASE("all presentation relations") {
    for (const auto& tag : relation_tags("pab")) {
        auto rep = check_relation(tag);
        INFO(tag, ": ", rep.detail, " lhs=", rep.lhs_braid, " rhs=", rep.rhs_braid);
        CHECK(rep.pass);
    }
    for (const auto& tag : relation_tags("pab1")) {
        auto rep = check_relation(tag);
        INFO(tag, ": ", rep.detail, " lhs=", rep.lhs_braid, " rhs=", rep.rhs_braid);
        CHECK(rep.pass);
    }
    for (int N : {1, 2, 3})
        for (const auto& tag : relation_tags("pabgamma")) {
            auto rep = check_relation(tag, N);
            INFO(tag, " N=", N, ": ", rep.detail);
            CHECK(rep.pass);
        }
}

TEST_CASE("tRP lift endpoints carry the shifted labels") {
    // lift of RP starting at (01_0)2_0 ends at (01_1)2_1
    int N = 2;
    ParObject s = parse_object("(01_0)2_0", N);
    MorWord lhs = make_word(
        s, {GenLetter{Head::Psi, {{0}, {1}, {2}}, 1}, GenLetter{Head::E, {{0}, {1, 2}}, 1},
            GenLetter{Head::Psi, {{0}, {1}, {2}}, -1}});
    CHECK(lhs.target == parse_object("(01_1)2_1", N));
}

TEST_CASE("morphism-level moperadic composition") {
    // identity o_i identity = identity
    MorWord id2 = identity_word(parse_object("(01)2", 0));
    MorWord idp = identity_word(parse_object("1 2", 0));
    CHECK(equal_morphisms(mor_compose_i(id2, 2, idp), identity_word(parse_object("(01)(23)", 0))));
    // R^{1,2} o_1 (12): block crossing of two strands over one
    MorWord r = generator(Head::R, parse_object("1 2", 0), {{1}, {2}});
    MorWord c = mor_compose_i(r, 1, identity_word(parse_object("1 2", 0)));
    // braid should equal block_cross(2,1)
    CHECK(equal(evaluate_to_braid(c), block_cross(2, 1)));
    // and the cable of the evaluation matches (classical letters only)
    CHECK(equal(evaluate_to_braid(c), cable(evaluate_to_braid(r), 1, 2)));
    // Psi o_0 Psi endpoint bookkeeping
    MorWord psi = generator(Head::Psi, parse_object("(01)2", 0), {{0}, {1}, {2}});
    MorWord pp = mor_compose_0(psi, psi);
    CHECK(pp.source == parse_object("(((01)2)3)4", 0));
    CHECK(pp.target == parse_object("(0(12))(34)", 0));
}

TEST_CASE("gamma equivariance of composition") {
    int N = 3;
    ParObject s = parse_object("(01_0)2_0", N);
    MorWord w = make_word(s, {GenLetter{Head::Psi, {{0}, {1}, {2}}, 1},
                              GenLetter{Head::E, {{0}, {1, 2}}, 1}});
    GammaVector gv{N, {{1, 1}, {2, 2}}};
    // translating then composing = composing then translating
    MorWord gw = gamma_act_word(gv, w);
    MorWord e = generator(Head::E, w.target, {{0}, {1, 2}});
    MorWord ge = generator(Head::E, gw.target, {{0}, {1, 2}});
    CHECK(gamma_act_word(gv, compose(w, e)).target == compose(gw, ge).target);
    // braid evaluation is translation-invariant
    CHECK(equal(evaluate_to_braid(w), evaluate_to_braid(gw)));
}

TEST_CASE("gamma_weight equals linking with the frozen strand mod N") {
    std::mt19937 rng(777);
    int N = 3;
    for (int trial = 0; trial < 40; ++trial) {
        // random composable word from a random start, walked back (endomorphism
        // harvested opportunistically: compose w with w^{-1} partway)
        ParObject start = parse_object(trial % 2 ? "(01)2" : "((01)2)3", 0);
        MorWord w = identity_word(start);
        for (int steps = 0; steps < 10; ++steps) {
            // try a random generator at the current object
            std::vector<MorWord> options;
            auto tryg = [&](Head h, std::vector<std::vector<int>> bl, int e) {
                try {
                    options.push_back(generator(h, w.target, bl, e));
                } catch (...) {}
            };
            auto lv = w.target.leaves();
            for (size_t a = 0; a + 1 < lv.size(); ++a) {
                tryg(Head::R, {{lv[a]}, {lv[a + 1]}}, 1);
                tryg(Head::R, {{lv[a]}, {lv[a + 1]}}, -1);
                tryg(Head::E, {{0}, {lv[a + 1]}}, 1);
                if (a + 2 < lv.size()) {
                    tryg(Head::Psi, {{lv[a]}, {lv[a + 1]}, {lv[a + 2]}}, 1);
                    tryg(Head::E, {{lv[a], lv[a + 1]}, {lv[a + 2]}}, 1);
                    tryg(Head::Psi, {{lv[a]}, {lv[a + 1]}, {lv[a + 2]}}, -1);
                }
            }
            if (options.empty()) break;
            w = compose(w, options[rng() % options.size()]);
        }
        MorWord endo = compose(w, invert(w));  // guaranteed endomorphism
        auto gw = gamma_weight(endo, N);
        auto lk = linking_with_zero(evaluate_to_braid(endo));
        auto order = endo.source.leaves();
        for (size_t p = 1; p < order.size(); ++p) {
            long expect = ((lk[p - 1] % N) + N) % N;
            CHECK(gw.comp.at(order[p]) == expect);
        }
    }
}

TEST_CASE("freeness smoke test: E and E^2 differ") {
    ParObject ob = parse_object("0 1", 0);
    MorWord e = generator(Head::E, ob, {{0}, {1}});
    MorWord e2 = compose(e, e);
    CHECK_FALSE(equal_morphisms(e, e2));
}

TEST_CASE("label covering invariant") {
    int N = 2;
    ParObject s = parse_object("(01_0)2_0", N);
    MorWord w = make_word(s, {GenLetter{Head::E, {{0}, {1}}, 1}, GenLetter{Head::E, {{0, 1}, {2}}, 1},
                              GenLetter{Head::E, {{0}, {1}}, 1}});
    // per-strand E count: strand 1 twice, strand 2 once
    CHECK(w.target == parse_object("(01_0)2_1", N));  // 1: 0+2=0 mod 2; 2: 0+1=1
}
