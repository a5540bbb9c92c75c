#include "moperad/lyndon.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <stdexcept>

namespace moperad {

TensorPoly tensor_mul(const TensorPoly& a, const TensorPoly& b) {
    TensorPoly out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            Rat& c = out[w];
            c += ca * cb;
            if (c == 0) out.erase(w);
        }
    return out;
}

// Duval's algorithm: all Lyndon words over {0..m-1} of length <= maxd, grouped by length.
static std::vector<std::vector<Word>> duval(int m, int maxd) {
    std::vector<std::vector<Word>> by_len(maxd + 1);
    Word w{0};
    while (!w.empty()) {
        if ((int)w.size() <= maxd) by_len[w.size()].push_back(w);
        Word prefix = w;
        while ((int)w.size() < maxd) {
            w.push_back(prefix[(w.size()) % prefix.size()]);
            // keep extending only while the periodic extension stays <= maxd
            if ((int)w.size() == maxd) break;
        }
        // w now has length maxd (periodic extension of prefix)
        while (!w.empty() && w.back() == m - 1) w.pop_back();
        if (!w.empty()) w.back()++;
    }
    for (auto& v : by_len) std::sort(v.begin(), v.end());
    return by_len;
}

FreeLie::FreeLie(int alphabet, int max_degree) : m_(alphabet), maxd_(max_degree) {
    if (alphabet < 1 || max_degree < 1) throw std::invalid_argument("FreeLie: bad sizes");
    auto by_len = duval(m_, maxd_);
    layers_.resize(maxd_);
    for (int d = 1; d <= maxd_; ++d) {
        LyndonLayer& L = layers_[d - 1];
        L.words = by_len[d];
        for (int i = 0; i < (int)L.words.size(); ++i) L.index[L.words[i]] = i;
        L.fact.resize(L.words.size());
        L.tensor.resize(L.words.size());
    }
    // degree 1: letters
    for (int i = 0; i < (int)layers_[0].words.size(); ++i) {
        layers_[0].fact[i] = {0, 0, 0, 0};
        layers_[0].tensor[i][layers_[0].words[i]] = 1;
    }
    // higher degrees: standard factorization w = uv with v the longest proper
    // Lyndon suffix; P_w = P_u P_v - P_v P_u
    for (int d = 2; d <= maxd_; ++d) {
        LyndonLayer& L = layers_[d - 1];
        for (int i = 0; i < (int)L.words.size(); ++i) {
            const Word& w = L.words[i];
            int split = -1;
            for (int s = 1; s < d; ++s) {
                Word v(w.begin() + s, w.end());
                int vd = d - s;
                auto it = layers_[vd - 1].index.find(v);
                if (it != layers_[vd - 1].index.end()) { split = s; break; }
            }
            if (split < 0) throw std::logic_error("lyndon: no standard factorization");
            Word u(w.begin(), w.begin() + split);
            Word v(w.begin() + split, w.end());
            int du = split, dv = d - split;
            int iu = layers_[du - 1].index.at(u);
            int iv = layers_[dv - 1].index.at(v);
            L.fact[i] = {du, iu, dv, iv};
            TensorPoly p = tensor_mul(layers_[du - 1].tensor[iu], layers_[dv - 1].tensor[iv]);
            TensorPoly q = tensor_mul(layers_[dv - 1].tensor[iv], layers_[du - 1].tensor[iu]);
            for (const auto& [w2, c] : q) {
                Rat& x = p[w2];
                x -= c;
                if (x == 0) p.erase(w2);
            }
            L.tensor[i] = std::move(p);
        }
    }
}

const LyndonLayer& FreeLie::layer(int d) const {
    if (d < 1 || d > maxd_) throw std::out_of_range("FreeLie::layer");
    return layers_[d - 1];
}

TensorPoly FreeLie::expand(int d, const std::vector<std::pair<int, Rat>>& coords) const {
    const LyndonLayer& L = layer(d);
    TensorPoly out;
    for (const auto& [i, c] : coords)
        for (const auto& [w, cw] : L.tensor[i]) {
            Rat& x = out[w];
            x += c * cw;
            if (x == 0) out.erase(w);
        }
    return out;
}

std::vector<std::pair<int, Rat>> FreeLie::lie_coords(int d, TensorPoly t) const {
    const LyndonLayer& L = layer(d);
    std::vector<std::pair<int, Rat>> out;
    // P_w = w + (lex-greater words), so peel off Lyndon words in increasing order
    for (int i = 0; i < (int)L.words.size(); ++i) {
        auto it = t.find(L.words[i]);
        if (it == t.end() || it->second == 0) continue;
        Rat c = it->second;
        out.emplace_back(i, c);
        for (const auto& [w, cw] : L.tensor[i]) {
            Rat& x = t[w];
            x -= c * cw;
            if (x == 0) t.erase(w);
        }
    }
    if (!t.empty()) throw std::invalid_argument("lie_coords: element is not Lie");
    return out;
}

const std::vector<std::pair<int, Rat>>& FreeLie::bracket_basis(int d1, int i1, int d2, int i2) const {
    auto key = std::make_tuple(d1, i1, d2, i2);
    auto it = bracket_cache_.find(key);
    if (it != bracket_cache_.end()) return it->second;
    std::vector<std::pair<int, Rat>> res;
    if (d1 + d2 <= maxd_) {
        TensorPoly p = tensor_mul(layer(d1).tensor[i1], layer(d2).tensor[i2]);
        TensorPoly q = tensor_mul(layer(d2).tensor[i2], layer(d1).tensor[i1]);
        for (const auto& [w, c] : q) {
            Rat& x = p[w];
            x -= c;
            if (x == 0) p.erase(w);
        }
        res = lie_coords(d1 + d2, std::move(p));
    }
    return bracket_cache_.emplace(key, std::move(res)).first->second;
}

std::shared_ptr<const FreeLie> free_lie_cached(int alphabet, int max_degree) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const FreeLie>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(alphabet, max_degree);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto p = std::make_shared<const FreeLie>(alphabet, max_degree);
    cache[key] = p;
    return p;
}

}  // namespace moperad
