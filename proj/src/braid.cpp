#include "moperad/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace moperad {

BraidWord::BraidWord(int n, std::vector<std::pair<int, int>> ls) : strands(n), letters(std::move(ls)) {
    if (n < 1) throw std::invalid_argument("BraidWord: need at least one strand");
    for (auto& [i, e] : letters) {
        if (i < 1 || i >= n) throw std::invalid_argument("BraidWord: generator index out of range");
        if (e != 1 && e != -1) throw std::invalid_argument("BraidWord: sign must be +-1");
    }
}

BraidWord& BraidWord::operator*=(const BraidWord& o) {
    if (strands != o.strands) throw std::invalid_argument("braid product: strand count mismatch");
    letters.insert(letters.end(), o.letters.begin(), o.letters.end());
    return *this;
}

BraidWord BraidWord::inverse() const {
    BraidWord out;
    out.strands = strands;
    out.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        out.letters.emplace_back(it->first, -it->second);
    return out;
}

std::string BraidWord::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, e] : letters) {
        if (!first) os << " ";
        first = false;
        os << "s" << i;
        if (e < 0) os << "^-1";
    }
    return os.str();
}

std::vector<int> permutation(const BraidWord& a) {
    std::vector<int> pos(a.strands);               // pos[p] = strand currently at position p
    std::iota(pos.begin(), pos.end(), 0);
    for (const auto& [i, e] : a.letters) std::swap(pos[i - 1], pos[i]);
    std::vector<int> perm(a.strands);
    for (int p = 0; p < a.strands; ++p) perm[pos[p]] = p;
    return perm;
}

bool is_pure(const BraidWord& a) {
    auto p = permutation(a);
    for (int i = 0; i < (int)p.size(); ++i)
        if (p[i] != i) return false;
    return true;
}

long exponent_sum(const BraidWord& a) {
    long s = 0;
    for (const auto& [i, e] : a.letters) s += e;
    return s;
}

// raw signed crossing counts per unordered pair of strand names; a full loop
// of one strand around another contributes 2
std::map<std::pair<int, int>, long> linking_matrix(const BraidWord& a) {
    std::map<std::pair<int, int>, long> counts;
    std::vector<int> pos(a.strands);
    std::iota(pos.begin(), pos.end(), 0);
    for (const auto& [i, e] : a.letters) {
        int x = pos[i - 1], y = pos[i];
        counts[{std::min(x, y), std::max(x, y)}] += e;
        std::swap(pos[i - 1], pos[i]);
    }
    for (auto it = counts.begin(); it != counts.end();)
        it = it->second == 0 ? counts.erase(it) : std::next(it);
    return counts;
}

std::vector<long> linking_with_zero(const BraidWord& a) {
    auto m = linking_matrix(a);
    std::vector<long> out(a.strands - 1, 0);
    for (int j = 1; j < a.strands; ++j) {
        auto it = m.find({0, j});
        long c = it == m.end() ? 0 : it->second;
        out[j - 1] = c / 2;  // full loops
    }
    return out;
}

// --- Dehornoy handle reduction ---
// A sigma_i-handle is a subword s_i^e v s_i^{-e} whose interior v contains no
// s_i^{+-} and no s_{i-1}^{+-}. Reducing the leftmost-ending handle repeatedly
// terminates; the reduced word is empty iff the braid is trivial.

BraidWord handle_reduce(BraidWord w) {
    auto& L = w.letters;
    long guard = 0;
    const long kGuard = 50'000'000;
    bool progress = true;
    while (progress) {
        progress = false;
        // find handle with leftmost closing letter
        for (size_t j = 0; j < L.size() && !progress; ++j) {
            int i = L[j].first, e = L[j].second;
            // nearest previous occurrence of s_i
            for (size_t k = j; k-- > 0;) {
                if (L[k].first == i) {
                    if (L[k].second == -e) {
                        // interior s_{i-1}-free?
                        bool ok = true;
                        for (size_t t = k + 1; t < j; ++t)
                            if (L[t].first == i - 1) {
                                ok = false;
                                break;
                            }
                        if (ok) {
                            // reduce: drop flanking letters, rewrite interior
                            std::vector<std::pair<int, int>> mid;
                            mid.reserve(3 * (j - k));
                            for (size_t t = k + 1; t < j; ++t) {
                                if (L[t].first == i + 1) {
                                    // s_{i+1}^d -> s_{i+1}^{e} s_i^d s_{i+1}^{-e}
                                    mid.emplace_back(i + 1, e);
                                    mid.emplace_back(i, L[t].second);
                                    mid.emplace_back(i + 1, -e);
                                } else {
                                    mid.push_back(L[t]);
                                }
                            }
                            std::vector<std::pair<int, int>> out;
                            out.reserve(L.size() + mid.size());
                            out.insert(out.end(), L.begin(), L.begin() + k);
                            out.insert(out.end(), mid.begin(), mid.end());
                            out.insert(out.end(), L.begin() + j + 1, L.end());
                            L = std::move(out);
                            progress = true;
                        }
                    }
                    break;  // nearest previous s_i found (either way, stop looking back)
                }
            }
            if (++guard > kGuard) throw std::runtime_error("handle_reduce: guard exceeded");
        }
    }
    return w;
}

bool is_trivial(const BraidWord& a) { return handle_reduce(a).empty(); }

bool equal(const BraidWord& a, const BraidWord& b) {
    if (a.strands != b.strands) throw std::invalid_argument("equal: strand count mismatch");
    BraidWord d = a * b.inverse();
    return is_trivial(d);
}

BraidWord elementary_pure(int i, int j, int n) {
    if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("elementary_pure: need 1<=i<j<=n");
    BraidWord w;
    w.strands = n;
    for (int k = j - 1; k >= i + 1; --k) w.letters.emplace_back(k, 1);
    w.letters.emplace_back(i, 1);
    w.letters.emplace_back(i, 1);
    for (int k = i + 1; k <= j - 1; ++k) w.letters.emplace_back(k, -1);
    return w;
}

BraidWord block_cross(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("block_cross: negative size");
    BraidWord w;
    w.strands = std::max(1, a + b);
    for (int i = 1; i <= b; ++i)
        for (int k = a + i - 1; k >= i; --k) w.letters.emplace_back(k, 1);
    return w;
}

BraidWord full_twist(int m) {
    BraidWord w;
    w.strands = std::max(1, m);
    for (int rep = 0; rep < m; ++rep)
        for (int k = 1; k <= m - 1; ++k) w.letters.emplace_back(k, 1);
    return w;
}

BraidWord shifted(const BraidWord& w, int offset, int n) {
    BraidWord out;
    out.strands = n;
    for (const auto& [i, e] : w.letters) {
        int k = i + offset;
        if (k < 1 || k >= n) throw std::invalid_argument("shifted: index out of range");
        out.letters.emplace_back(k, e);
    }
    return out;
}

BraidWord cable(const BraidWord& a, int i, int m) {
    if (i < 1 || i > a.strands) throw std::invalid_argument("cable: bad strand");
    if (m < 0) throw std::invalid_argument("cable: negative multiplicity");
    int n2 = a.strands + m - 1;
    BraidWord out;
    out.strands = std::max(1, n2);
    std::vector<int> size(a.strands, 1);
    size[i - 1] = m;
    for (const auto& [k, e] : a.letters) {
        int off = 0;
        for (int t = 0; t < k - 1; ++t) off += size[t];
        int sa = size[k - 1], sb = size[k];
        BraidWord bc = block_cross(sa, sb);
        if (e < 0) bc = bc.inverse();
        if (n2 >= 1 && sa + sb > 0) out *= shifted(bc, off, std::max(1, n2));
        std::swap(size[k - 1], size[k]);
    }
    return out;
}

}  // namespace moperad
