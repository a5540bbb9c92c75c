#include "moperad/linalg.hpp"

#include <stdexcept>

namespace moperad {

SparseRow row_add(const SparseRow& a, const SparseRow& b, const Rat& factor) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Rat c = b[j].second * factor;
            if (c != 0) out.emplace_back(b[j].first, std::move(c));
            ++j;
        } else {
            Rat c = a[i].second + b[j].second * factor;
            if (c != 0) out.emplace_back(a[i].first, std::move(c));
            ++i, ++j;
        }
    }
    return out;
}

void row_scale(SparseRow& a, const Rat& factor) {
    for (auto& [c, v] : a) v *= factor;
}

SparseRow Rref::reduce(SparseRow row) const {
    // eliminate pivot columns left to right; positions before k never change
    size_t k = 0;
    while (k < row.size()) {
        auto it = pivots_.find(row[k].first);
        if (it == pivots_.end()) {
            ++k;
            continue;
        }
        row = row_add(row, it->second, -row[k].second);
    }
    return row;
}

bool Rref::add_row(SparseRow row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    Rat inv = 1 / row.front().second;
    row_scale(row, inv);
    int piv = row.front().first;
    pivots_.emplace(piv, std::move(row));
    return true;
}

void Rref::finalize() {
    // eliminate every pivot column from all other rows (iterate from the
    // largest pivot downward so each row becomes fully reduced)
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        int piv = it->first;
        for (auto& [p2, row] : pivots_) {
            if (p2 == piv) continue;
            for (size_t k = 0; k < row.size(); ++k) {
                if (row[k].first == piv) {
                    row = row_add(row, it->second, -row[k].second);
                    break;
                }
            }
        }
    }
}

bool solve_affine(const std::vector<SparseRow>& rows, const std::vector<Rat>& rhs,
                  int ncols, std::vector<Rat>& sol, int* rank_out, int* nullity) {
    if (rows.size() != rhs.size()) throw std::invalid_argument("solve_affine: size mismatch");
    Rref rref;
    // augmented column at index ncols
    for (size_t r = 0; r < rows.size(); ++r) {
        SparseRow row = rows[r];
        if (rhs[r] != 0) row.emplace_back(ncols, rhs[r]);
        rref.add_row(std::move(row));
    }
    if (rref.has_pivot(ncols)) return false;  // inconsistent
    rref.finalize();
    sol.assign(ncols, Rat(0));
    for (const auto& [piv, row] : rref.pivot_rows()) {
        // x_piv = rhs_entry - (free vars = 0 contribute nothing)
        Rat v(0);
        if (!row.empty() && row.back().first == ncols) v = row.back().second;
        sol[piv] = v;
    }
    if (rank_out) *rank_out = rref.rank();
    if (nullity) *nullity = ncols - rref.rank();
    return true;
}

}  // namespace moperad
