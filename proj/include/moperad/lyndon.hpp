#pragma once

#include <map>
#include <memory>
#include <vector>

#include "moperad/rational.hpp"

namespace moperad {

// Words over the alphabet {0, ..., m-1}.
using Word = std::vector<int>;

// Homogeneous element of the tensor algebra (noncommutative polynomial),
// all words of one fixed length.
using TensorPoly = std::map<Word, Rat>;

TensorPoly tensor_mul(const TensorPoly& a, const TensorPoly& b);

// Lyndon words of a fixed degree together with their standard bracketings,
// expanded once into the tensor algebra. Basis of the free Lie algebra.
struct LyndonLayer {
    std::vector<Word> words;               // sorted lex-increasing
    std::map<Word, int> index;             // word -> position in `words`
    // standard factorization w = u v: (deg_u, idx_u, deg_v, idx_v); unused for degree 1
    std::vector<std::array<int, 4>> fact;
    std::vector<TensorPoly> tensor;        // tensor expansion of the bracketing
};

// All Lyndon data for a fixed alphabet, degrees 1..max_degree.
class FreeLie {
  public:
    FreeLie(int alphabet, int max_degree);

    int alphabet() const { return m_; }
    int max_degree() const { return maxd_; }
    const LyndonLayer& layer(int d) const;
    int dim(int d) const { return (int)layer(d).words.size(); }

    // Expands sparse Lyndon coordinates (pairs (index, coeff)) of degree d
    // into the tensor algebra.
    TensorPoly expand(int d, const std::vector<std::pair<int, Rat>>& coords) const;

    // Extracts Lyndon coordinates of a degree-d tensor element. Throws if the
    // element is not in the free Lie algebra.
    std::vector<std::pair<int, Rat>> lie_coords(int d, TensorPoly t) const;

    // Bracket of two basis elements, as Lyndon coordinates of degree d1+d2.
    // Returns empty if d1+d2 > max_degree.
    const std::vector<std::pair<int, Rat>>& bracket_basis(int d1, int i1, int d2, int i2) const;

  private:
    int m_, maxd_;
    std::vector<LyndonLayer> layers_;  // [1..maxd_], layers_[d-1]
    mutable std::map<std::tuple<int, int, int, int>, std::vector<std::pair<int, Rat>>> bracket_cache_;
};

std::shared_ptr<const FreeLie> free_lie_cached(int alphabet, int max_degree);

}  // namespace moperad
