#pragma once

#include <map>
#include <string>
#include <vector>

namespace moperad {

// Word in the Artin generators of B_n: letters (index 1..n-1, sign +-1).
struct BraidWord {
    int strands = 1;
    std::vector<std::pair<int, int>> letters;

    BraidWord() = default;
    BraidWord(int n, std::vector<std::pair<int, int>> ls);

    BraidWord& operator*=(const BraidWord& o);  // concatenation
    friend BraidWord operator*(BraidWord a, const BraidWord& b) { return a *= b; }
    BraidWord inverse() const;
    bool empty() const { return letters.empty(); }

    std::string str() const;  // "s1 s2^-1 ..." (1-indexed as stored)
};

// permutation of positions: perm[p] = final position of the strand starting at p (0-based)
std::vector<int> permutation(const BraidWord& a);
bool is_pure(const BraidWord& a);
long exponent_sum(const BraidWord& a);

// linking numbers indexed by starting positions (strand names): for i < j,
// half the signed count of crossings between the strands starting at i and j
std::map<std::pair<int, int>, long> linking_matrix(const BraidWord& a);

// Annular convention: strand names 0..n-1 with name = starting position;
// name 0 is the frozen strand. Returns the linking of each non-frozen strand
// with strand 0.
std::vector<long> linking_with_zero(const BraidWord& a);

// Dehornoy handle reduction; the result represents the same braid and is
// handle-free (empty iff the braid is trivial).
BraidWord handle_reduce(BraidWord w);
bool is_trivial(const BraidWord& a);
bool equal(const BraidWord& a, const BraidWord& b);

// x_{ij} = (s_{j-1} ... s_{i+1}) s_i^2 (s_{i+1}^{-1} ... s_{j-1}^{-1}),
// 1 <= i < j <= n (positions 1-based)
BraidWord elementary_pure(int i, int j, int n);

// positive crossing of a block of `a` strands with an adjacent block of `b`
// strands, as an a*b-letter word in B_{a+b}; compose with shift to embed
BraidWord block_cross(int a, int b);
// full twist of m strands: (s_1 ... s_{m-1})^m
BraidWord full_twist(int m);
// re-embed: adds `offset` to every generator index, in B_n
BraidWord shifted(const BraidWord& w, int offset, int n);

// replaces the strand at starting position i (1-based) by m parallel strands
// (m = 0 deletes it)
BraidWord cable(const BraidWord& a, int i, int m);

}  // namespace moperad
