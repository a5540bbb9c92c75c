#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "moperad/braid.hpp"

using namespace moperad;

TEST_CASE("basic equalities") {
    BraidWord a(3, {{1, 1}, {2, 1}, {1, 1}});
    BraidWord b(3, {{2, 1}, {1, 1}, {2, 1}});
    CHECK(equal(a, b));  // braid relation
    BraidWord c(4, {{1, 1}, {3, 1}});
    BraidWord d(4, {{3, 1}, {1, 1}});
    CHECK(equal(c, d));  // far commutation
    BraidWord e(2, {{1, 1}, {1, 1}});
    CHECK_FALSE(is_trivial(e));  // sigma_1^2 != 1 in B_2
    CHECK(is_trivial(BraidWord(2, {{1, 1}, {1, -1}})));
}

TEST_CASE("permutation and purity") {
    BraidWord s1(2, {{1, 1}});
    auto p = permutation(s1);
    CHECK(p == std::vector<int>{1, 0});
    CHECK_FALSE(is_pure(s1));
    CHECK(is_pure(elementary_pure(1, 3, 3)));
    CHECK(is_pure(BraidWord(2, {})));
}

TEST_CASE("elementary pure braids") {
    CHECK(elementary_pure(1, 2, 2).str() == "s1 s1");
    // x_13 in B_3 = s2 s1^2 s2^-1
    BraidWord x13 = elementary_pure(1, 3, 3);
    CHECK(equal(x13, BraidWord(3, {{2, 1}, {1, 1}, {1, 1}, {2, -1}})));
}

TEST_CASE("linking numbers") {
    // x_01 annular (names 0,1): linking of strand 1 with 0 is 1
    BraidWord x01 = elementary_pure(1, 2, 2);
    auto lk = linking_with_zero(x01);
    CHECK(lk == std::vector<long>{1});
    // identity -> zeros
    CHECK(linking_with_zero(BraidWord(3, {})) == std::vector<long>{0, 0});
    // word not involving strand 0: x_12 in annular B_3 (names 0,1,2)
    BraidWord x12 = elementary_pure(2, 3, 3);
    CHECK(linking_with_zero(x12) == std::vector<long>{0, 0});
    // linking is a word-equivalence invariant: conjugation-free check
    BraidWord w = x01 * x01.inverse() * x01;
    CHECK(linking_with_zero(w) == std::vector<long>{1});
}

TEST_CASE("block crossings") {
    CHECK(block_cross(1, 1).str() == "s1");
    CHECK(block_cross(1, 0).empty());
    CHECK(block_cross(2, 1).str() == "s2 s1");
    // permutation is the block transposition
    auto p = permutation(block_cross(2, 3));
    CHECK(p == std::vector<int>{3, 4, 0, 1, 2});
}

TEST_CASE("cable") {
    // cable of identity is identity
    CHECK(cable(BraidWord(2, {}), 1, 3).empty());
    // cable(s1 in B2, 1, 2): blocks {1,2} and {3}
    BraidWord c = cable(BraidWord(2, {{1, 1}}), 1, 2);
    CHECK(permutation(c) == std::vector<int>{1, 2, 0});
    // cabling is a homomorphism in the word argument
    BraidWord a(3, {{1, 1}, {2, -1}});
    BraidWord b(3, {{2, 1}, {1, 1}});
    CHECK(equal(cable(a * b, 2, 2), cable(a, 2, 2) * cable(b, 2, 2)));
    // delete a strand: cable(x_13 in B3, 2, 0) -> x_12 in B2
    BraidWord x13 = elementary_pure(1, 3, 3);
    CHECK(equal(cable(x13, 2, 0), elementary_pure(1, 2, 2)));
    // cable then delete the new strand: back to the original word
    BraidWord w(3, {{1, 1}, {2, -1}, {1, 1}, {1, 1}});
    BraidWord doubled = cable(w, 2, 2);
    CHECK(equal(cable(doubled, 2, 0), w));
    CHECK(equal(cable(doubled, 3, 0), w));
}

TEST_CASE("randomized rewriting invariance") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 3 + (int)(rng() % 3);  // 3..5 strands
        int len = 10 + (int)(rng() % 31);
        std::vector<std::pair<int, int>> ls;
        for (int k = 0; k < len; ++k)
            ls.emplace_back(1 + (int)(rng() % (n - 1)), (rng() % 2) ? 1 : -1);
        BraidWord w(n, ls);
        // insert a trivial pair somewhere
        BraidWord w2 = w;
        int gen = 1 + (int)(rng() % (n - 1));
        size_t pos = rng() % (w2.letters.size() + 1);
        w2.letters.insert(w2.letters.begin() + pos, {gen, 1});
        w2.letters.insert(w2.letters.begin() + pos + 1, {gen, -1});
        CHECK(equal(w, w2));
        // invariants agree on rewrites
        CHECK(permutation(w) == permutation(w2));
        CHECK(linking_matrix(w) == linking_matrix(w2));
        // w * w^{-1} trivial
        CHECK(is_trivial(w * w.inverse()));
        // braid relation applied at a random admissible spot
        for (size_t t = 0; t + 1 < w.letters.size(); ++t) {
            auto [i, e] = w.letters[t];
            auto [j, f] = w.letters[t + 1];
            if (std::abs(i - j) >= 2) {
                BraidWord w3 = w;
                std::swap(w3.letters[t], w3.letters[t + 1]);
                CHECK(equal(w, w3));
                break;
            }
        }
    }
}

TEST_CASE("non-equal braids are distinguished") {
    BraidWord e(3, {});
    CHECK_FALSE(equal(BraidWord(3, {{1, 1}}), e));
    CHECK_FALSE(equal(elementary_pure(1, 2, 3), elementary_pure(2, 3, 3)));
    CHECK_FALSE(equal(elementary_pure(1, 2, 3), elementary_pure(1, 2, 3).inverse()));
}
