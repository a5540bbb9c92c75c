#pragma once

#include <map>
#include <vector>

#include "moperad/rational.hpp"

namespace moperad {

// Sparse row: (column, coeff) pairs, sorted by column, no zero coeffs.
using SparseRow = std::vector<std::pair<int, Rat>>;

SparseRow row_add(const SparseRow& a, const SparseRow& b, const Rat& factor);  // a + factor*b
void row_scale(SparseRow& a, const Rat& factor);

// Incremental reduced row echelon form over Q with a fixed column order.
// The RREF of the row span is unique, so the result is deterministic.
class Rref {
  public:
    // Reduces `row` against the current pivots in place; returns the fully
    // reduced row (possibly empty).
    SparseRow reduce(SparseRow row) const;

    // Reduces and, if nonzero, installs as a new pivot row (normalized).
    // Returns true if the row increased the rank.
    bool add_row(SparseRow row);

    // Back-substitutes so every pivot column occurs in exactly one row.
    void finalize();

    int rank() const { return (int)pivots_.size(); }
    bool has_pivot(int col) const { return pivots_.count(col) > 0; }
    const std::map<int, SparseRow>& pivot_rows() const { return pivots_; }

  private:
    std::map<int, SparseRow> pivots_;  // pivot column -> row with leading 1 there
};

// Solves A x = rhs where rows are given as sparse rows over columns
// 0..ncols-1. Returns true and writes the canonical particular solution
// (free variables set to 0) into `sol`; returns false if inconsistent.
// If `nullity` is non-null, receives the dimension of the solution space.
bool solve_affine(const std::vector<SparseRow>& rows, const std::vector<Rat>& rhs,
                  int ncols, std::vector<Rat>& sol, int* rank_out = nullptr,
                  int* nullity = nullptr);

}  // namespace moperad
