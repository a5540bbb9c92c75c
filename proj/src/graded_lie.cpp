#include "moperad/graded_lie.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <stdexcept>

namespace moperad {

GenSymbol GenSymbol::t0i(int i) {
    if (i == kFrozenStrand) throw std::invalid_argument("t0i: strand must be non-frozen");
    GenSymbol g;
    g.kind = T0i;
    g.i = i;
    return g;
}

GenSymbol GenSymbol::tij(int i, int j, int alpha, int modulus) {
    if (i == j) throw std::invalid_argument("tij: i == j rejected");
    GenSymbol g;
    g.kind = Tij;
    if (i < j) {
        g.i = i;
        g.j = j;
        g.alpha = ((alpha % modulus) + modulus) % modulus;
    } else {
        g.i = j;
        g.j = i;
        g.alpha = ((-alpha % modulus) + modulus) % modulus;
    }
    return g;
}

GenSymbol GenSymbol::free_gen(int idx) {
    GenSymbol g;
    g.kind = FreeGen;
    g.i = idx;
    return g;
}

bool GenSymbol::operator<(const GenSymbol& o) const {
    return std::tie(kind, i, j, alpha) < std::tie(o.kind, o.i, o.j, o.alpha);
}
bool GenSymbol::operator==(const GenSymbol& o) const {
    return kind == o.kind && i == o.i && j == o.j && alpha == o.alpha;
}

std::string GenSymbol::str() const {
    std::ostringstream os;
    switch (kind) {
        case T0i: os << "t0." << i; break;
        case Tij: os << "t." << i << "." << j << "." << alpha; break;
        case FreeGen: os << "g." << i; break;
    }
    return os.str();
}

GenSymbol GenSymbol::parse(const std::string& s, int modulus) {
    auto parts = [&] {
        std::vector<std::string> out;
        std::string cur;
        for (char c : s) {
            if (c == '.') {
                out.push_back(cur);
                cur.clear();
            } else
                cur.push_back(c);
        }
        out.push_back(cur);
        return out;
    }();
    if (parts.size() == 2 && parts[0] == "t0") return t0i(std::stoi(parts[1]));
    if (parts.size() == 2 && parts[0] == "g") return free_gen(std::stoi(parts[1]));
    if (parts.size() == 4 && parts[0] == "t")
        return tij(std::stoi(parts[1]), std::stoi(parts[2]), std::stoi(parts[3]), modulus);
    throw std::invalid_argument("bad generator name: " + s);
}

int LiePresentation::gen_index(const GenSymbol& g) const {
    for (int k = 0; k < (int)gens.size(); ++k)
        if (gens[k] == g) return k;
    return -1;
}

std::string LiePresentation::signature() const {
    std::ostringstream os;
    os << (family == Free ? "free" : family == Classical ? "t" : "tg");
    os << ";N=" << gamma_modulus << ";names=";
    for (int n : names) os << n << ",";
    os << ";gens=" << gens.size() << ";rels=" << relations.size();
    return os.str();
}

// degree-2 free-Lie Lyndon coordinate of [g_a, g_b]
static void add_bracket2(const FreeLie& fl, std::map<int, Rat>& acc, int a, int b, const Rat& c) {
    if (a == b) return;
    int lo = std::min(a, b), hi = std::max(a, b);
    Word w{lo, hi};
    int idx = fl.layer(2).index.at(w);
    acc[idx] += (a < b) ? c : -c;
}

static SparseRow to_row(const std::map<int, Rat>& acc) {
    SparseRow r;
    for (const auto& [k, v] : acc)
        if (v != 0) r.emplace_back(k, v);
    return r;
}

LiePresentation free_presentation(int num_gens) {
    LiePresentation p;
    p.family = LiePresentation::Free;
    for (int k = 0; k < num_gens; ++k) p.gens.push_back(GenSymbol::free_gen(k));
    return p;
}

LiePresentation t_presentation(const std::vector<int>& names_in) {
    LiePresentation p;
    p.family = LiePresentation::Classical;
    p.names = names_in;
    std::sort(p.names.begin(), p.names.end());
    const auto& I = p.names;
    int n = (int)I.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) p.gens.push_back(GenSymbol::tij(I[a], I[b], 0, 1));
    // relations need the degree-2 Lyndon layer of the free algebra
    FreeLie fl((int)p.gens.size(), 2);
    auto idx = [&](int i, int j) { return p.gen_index(GenSymbol::tij(i, j, 0, 1)); };
    // locality: [t_ij, t_kl] = 0, disjoint pairs
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = a + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    std::set<int> s{a, b, c, d};
                    if (s.size() != 4) continue;
                    std::map<int, Rat> acc;
                    add_bracket2(fl, acc, idx(I[a], I[b]), idx(I[c], I[d]), Rat(1));
                    auto row = to_row(acc);
                    if (!row.empty()) p.relations.emplace_back(2, row);
                }
    // 4T: [t_ij, t_ik + t_jk] = 0
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (c == a || c == b) continue;
                std::map<int, Rat> acc;
                add_bracket2(fl, acc, idx(I[a], I[b]), idx(I[a], I[c]), Rat(1));
                add_bracket2(fl, acc, idx(I[a], I[b]), idx(I[b], I[c]), Rat(1));
                auto row = to_row(acc);
                if (!row.empty()) p.relations.emplace_back(2, row);
            }
    return p;
}

LiePresentation t_gamma_presentation(const std::vector<int>& names_in, int N) {
    if (N < 1) throw std::invalid_argument("t_gamma: N >= 1 required");
    LiePresentation p;
    p.family = LiePresentation::Cyclotomic;
    p.gamma_modulus = N;
    p.names = names_in;
    std::sort(p.names.begin(), p.names.end());
    const auto& I = p.names;
    int n = (int)I.size();
    for (int a = 0; a < n; ++a) {
        if (I[a] == kFrozenStrand) throw std::invalid_argument("t_gamma: 0 is reserved");
        p.gens.push_back(GenSymbol::t0i(I[a]));
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int al = 0; al < N; ++al) p.gens.push_back(GenSymbol::tij(I[a], I[b], al, N));
    FreeLie fl((int)p.gens.size(), 2);
    auto t0 = [&](int i) { return p.gen_index(GenSymbol::t0i(i)); };
    auto tij = [&](int i, int j, int al) { return p.gen_index(GenSymbol::tij(i, j, al, N)); };
    auto push = [&](std::map<int, Rat>& acc) {
        auto row = to_row(acc);
        if (!row.empty()) p.relations.emplace_back(2, row);
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            int i = I[a], j = I[b];
            // t4T-bar: [t_0i, t_0j + sum_al t^al_ij] = 0
            std::map<int, Rat> acc;
            add_bracket2(fl, acc, t0(i), t0(j), Rat(1));
            for (int al = 0; al < N; ++al) add_bracket2(fl, acc, t0(i), tij(i, j, al), Rat(1));
            push(acc);
            // t6T-bar: [t_0i + t_0j + sum_be t^be_ij, t^al_ij] = 0
            for (int al = 0; al < N; ++al) {
                std::map<int, Rat> acc2;
                add_bracket2(fl, acc2, t0(i), tij(i, j, al), Rat(1));
                add_bracket2(fl, acc2, t0(j), tij(i, j, al), Rat(1));
                for (int be = 0; be < N; ++be)
                    add_bracket2(fl, acc2, tij(i, j, be), tij(i, j, al), Rat(1));
                push(acc2);
            }
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (a == b || a == c || b == c) continue;
                int i = I[a], j = I[b], k = I[c];
                // tL: [t_0k, t^al_ij] = 0
                for (int al = 0; al < N; ++al) {
                    std::map<int, Rat> acc;
                    add_bracket2(fl, acc, t0(k), tij(i, j, al), Rat(1));
                    push(acc);
                }
                // t4T: [t^al_ij, t^{al+be}_ik + t^be_jk] = 0
                for (int al = 0; al < N; ++al)
                    for (int be = 0; be < N; ++be) {
                        std::map<int, Rat> acc;
                        add_bracket2(fl, acc, tij(i, j, al), tij(i, k, (al + be) % N), Rat(1));
                        add_bracket2(fl, acc, tij(i, j, al), tij(j, k, be), Rat(1));
                        push(acc);
                    }
            }
    // tL second family: [t^al_ij, t^be_kl] = 0, all four distinct
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = a + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    std::set<int> s{a, b, c, d};
                    if (s.size() != 4) continue;
                    for (int al = 0; al < N; ++al)
                        for (int be = 0; be < N; ++be) {
                            std::map<int, Rat> acc;
                            add_bracket2(fl, acc, tij(I[a], I[b], al), tij(I[c], I[d], be), Rat(1));
                            push(acc);
                        }
                }
    return p;
}

// ---------------- handle ----------------

LieAlgebraHandle::LieAlgebraHandle(LiePresentation pres, int max_degree)
    : pres_(std::move(pres)), D_(max_degree) {
    if (D_ < 1) throw std::invalid_argument("build_algebra: D >= 1 required");
    if (pres_.gens.empty()) throw std::invalid_argument("build_algebra: no generators");
    for (const auto& [d, row] : pres_.relations) {
        if (d < 2) throw std::invalid_argument("build_algebra: relation of degree < 2");
        (void)row;
    }
    flie_ = free_lie_cached((int)pres_.gens.size(), D_);
    std::ostringstream os;
    os << pres_.signature() << ";D=" << D_;
    sig_ = os.str();

    layers_.resize(D_);
    // degree-d ideal: seeds of degree d plus [generators, ideal_{d-1}]
    for (int d = 2; d <= D_; ++d) {
        Layer& L = layers_[d - 1];
        for (const auto& [rd, row] : pres_.relations)
            if (rd == d) L.ideal.add_row(row);
        if (d > 2) {
            const Layer& prev = layers_[d - 2];
            for (const auto& [piv, row] : prev.ideal.pivot_rows()) {
                for (int g = 0; g < (int)pres_.gens.size(); ++g) {
                    std::map<int, Rat> acc;
                    for (const auto& [li, c] : row)
                        for (const auto& [ri, rc] : flie_->bracket_basis(1, g, d - 1, li))
                            acc[ri] += c * rc;
                    SparseRow br;
                    for (const auto& [k, v] : acc)
                        if (v != 0) br.emplace_back(k, v);
                    L.ideal.add_row(std::move(br));
                }
            }
        }
        // echelon form is enough: reduce() against it yields the unique
        // representative supported on non-pivot columns
    }
    for (int d = 1; d <= D_; ++d) {
        Layer& L = layers_[d - 1];
        int dimf = flie_->dim(d);
        for (int k = 0; k < dimf; ++k)
            if (d == 1 || !L.ideal.has_pivot(k)) {
                L.basis_pos[k] = (int)L.basis.size();
                L.basis.push_back(k);
            }
    }
}

int LieAlgebraHandle::dim(int d) const {
    if (d < 1 || d > D_) return 0;
    return (int)layers_[d - 1].basis.size();
}

std::vector<int> LieAlgebraHandle::dims() const {
    std::vector<int> out;
    for (int d = 1; d <= D_; ++d) out.push_back(dim(d));
    return out;
}

int LieAlgebraHandle::basis_free_index(int d, int p) const { return layers_[d - 1].basis.at(p); }

int LieAlgebraHandle::basis_position(int d, int free_index) const {
    auto& m = layers_[d - 1].basis_pos;
    auto it = m.find(free_index);
    return it == m.end() ? -1 : it->second;
}

SparseRow LieAlgebraHandle::project(int d, SparseRow free_coords) const {
    if (d < 1 || d > D_) return {};
    if (d > 1) free_coords = layers_[d - 1].ideal.reduce(std::move(free_coords));
    SparseRow out;
    for (auto& [k, c] : free_coords) out.emplace_back(layers_[d - 1].basis_pos.at(k), std::move(c));
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.first < b.first; });
    return out;
}

SparseRow LieAlgebraHandle::lift(int d, const SparseRow& q) const {
    SparseRow out;
    for (const auto& [p, c] : q) out.emplace_back(layers_[d - 1].basis.at(p), c);
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.first < b.first; });
    return out;
}

const SparseRow& LieAlgebraHandle::basis_bracket(int d1, int p1, int d2, int p2) const {
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto key = std::make_tuple(d1, p1, d2, p2);
    auto it = bracket_cache_.find(key);
    if (it != bracket_cache_.end()) return it->second;
    SparseRow res;
    if (d1 + d2 <= D_) {
        int f1 = basis_free_index(d1, p1), f2 = basis_free_index(d2, p2);
        SparseRow free_br;
        for (const auto& [k, c] : flie_->bracket_basis(d1, f1, d2, f2)) free_br.emplace_back(k, c);
        res = project(d1 + d2, std::move(free_br));
    }
    return bracket_cache_.emplace(key, std::move(res)).first->second;
}

LieElement LieAlgebraHandle::zero() const {
    return LieElement{shared_from_this(), {}};
}

LieElement LieAlgebraHandle::gen(const GenSymbol& g) const {
    int k = pres_.gen_index(g);
    if (k < 0) throw std::invalid_argument("unknown generator " + g.str());
    return gen(k);
}

LieElement LieAlgebraHandle::gen(int index) const {
    LieElement e{shared_from_this(), {}};
    e.coords[1] = {{basis_position(1, index), Rat(1)}};
    return e;
}

LieElement LieAlgebraHandle::from_free(int d, const SparseRow& free_coords) const {
    LieElement e{shared_from_this(), {}};
    SparseRow q = project(d, free_coords);
    if (!q.empty()) e.coords[d] = std::move(q);
    return e;
}

HandlePtr build_algebra(const LiePresentation& pres, int max_degree) {
    return std::make_shared<const LieAlgebraHandle>(pres, max_degree);
}

static std::map<std::string, HandlePtr>& handle_registry() {
    static std::map<std::string, HandlePtr> reg;
    return reg;
}
static std::mutex handle_mu;

static HandlePtr cached_build(const LiePresentation& p, int D) {
    std::ostringstream os;
    os << p.signature() << ";D=" << D;
    std::lock_guard<std::mutex> lock(handle_mu);
    auto& reg = handle_registry();
    auto it = reg.find(os.str());
    if (it != reg.end()) return it->second;
    auto h = build_algebra(p, D);
    reg[os.str()] = h;
    return h;
}

HandlePtr free_handle(int num_gens, int D) { return cached_build(free_presentation(num_gens), D); }
HandlePtr t_handle(const std::vector<int>& names, int D) {
    return cached_build(t_presentation(names), D);
}
HandlePtr t_gamma_handle(const std::vector<int>& names, int N, int D) {
    return cached_build(t_gamma_presentation(names, N), D);
}

// ---------------- elements ----------------

bool LieElement::is_zero() const {
    for (const auto& [d, row] : coords)
        if (!row.empty()) return false;
    return true;
}

LieElement& LieElement::operator+=(const LieElement& o) {
    if (o.alg && alg && o.alg->signature() != alg->signature())
        throw std::invalid_argument("LieElement: handle mismatch");
    for (const auto& [d, row] : o.coords) {
        auto& mine = coords[d];
        mine = row_add(mine, row, Rat(1));
        if (mine.empty()) coords.erase(d);
    }
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
    if (o.alg && alg && o.alg->signature() != alg->signature())
        throw std::invalid_argument("LieElement: handle mismatch");
    for (const auto& [d, row] : o.coords) {
        auto& mine = coords[d];
        mine = row_add(mine, row, Rat(-1));
        if (mine.empty()) coords.erase(d);
    }
    return *this;
}

LieElement& LieElement::operator*=(const Rat& c) {
    if (c == 0) {
        coords.clear();
        return *this;
    }
    for (auto& [d, row] : coords) row_scale(row, c);
    return *this;
}

bool LieElement::operator==(const LieElement& o) const {
    LieElement diff = *this;
    diff -= o;
    return diff.is_zero();
}

LieElement LieElement::truncated(int degree) const {
    LieElement out{alg, {}};
    for (const auto& [d, row] : coords)
        if (d <= degree && !row.empty()) out.coords[d] = row;
    return out;
}

LieElement bracket(const LieElement& a, const LieElement& b) {
    if (!a.alg || !b.alg || a.alg->signature() != b.alg->signature())
        throw std::invalid_argument("bracket: handle mismatch");
    const auto& H = *a.alg;
    LieElement out{a.alg, {}};
    for (const auto& [da, ra] : a.coords)
        for (const auto& [db, rb] : b.coords) {
            if (da + db > H.max_degree()) continue;
            std::map<int, Rat> acc;
            for (const auto& [pa, ca] : ra)
                for (const auto& [pb, cb] : rb) {
                    Rat c = ca * cb;
                    for (const auto& [p, v] : H.basis_bracket(da, pa, db, pb)) acc[p] += c * v;
                }
            SparseRow row;
            for (const auto& [p, v] : acc)
                if (v != 0) row.emplace_back(p, v);
            if (!row.empty()) {
                auto& mine = out.coords[da + db];
                mine = row_add(mine, row, Rat(1));
                if (mine.empty()) out.coords.erase(da + db);
            }
        }
    return out;
}

int GammaVector::at(int name) const {
    auto it = comp.find(name);
    return it == comp.end() ? 0 : it->second;
}

GammaVector GammaVector::operator+(const GammaVector& o) const {
    if (modulus != o.modulus) throw std::invalid_argument("GammaVector: modulus mismatch");
    GammaVector out{modulus, comp};
    for (const auto& [k, v] : o.comp) out.comp[k] = ((out.comp[k] + v) % modulus + modulus) % modulus;
    return out;
}

// ---------------- morphisms ----------------

LieMorphism::LieMorphism(HandlePtr src, HandlePtr dst, std::vector<LieElement> images)
    : src_(std::move(src)), dst_(std::move(dst)), images_(std::move(images)) {
    if ((int)images_.size() != src_->num_gens())
        throw std::invalid_argument("LieMorphism: wrong number of generator images");
}

LieElement LieMorphism::image_of_basis(int d, int p) const {
    {
        auto it = cache_.find({d, p});
        if (it != cache_.end()) return it->second;
    }
    LieElement res;
    if (d == 1) {
        res = images_.at(src_->basis_free_index(1, p));
    } else {
        // standard factorization of the Lyndon word -> nested brackets
        int f = src_->basis_free_index(d, p);
        const auto& fact = src_->flie().layer(d).fact[f];
        int du = fact[0], fu = fact[1], dv = fact[2], fv = fact[3];
        // the factors are Lyndon basis elements of the free algebra; map them
        // through the quotient section (they may be pivot elements in the
        // source quotient, so build their images recursively from the free side)
        auto free_image = [&](auto&& self, int dd, int ff) -> LieElement {
            if (dd == 1) return images_.at(ff);
            const auto& fa = src_->flie().layer(dd).fact[ff];
            LieElement l = self(self, fa[0], fa[1]);
            LieElement r = self(self, fa[2], fa[3]);
            return bracket(l, r);
        };
        LieElement l = free_image(free_image, du, fu);
        LieElement r = free_image(free_image, dv, fv);
        res = bracket(l, r);
    }
    return cache_.emplace(std::make_pair(d, p), std::move(res)).first->second;
}

LieElement LieMorphism::apply(const LieElement& a) const {
    if (!a.alg || a.alg->signature() != src_->signature())
        throw std::invalid_argument("LieMorphism::apply: handle mismatch");
    LieElement out = dst_->zero();
    for (const auto& [d, row] : a.coords)
        for (const auto& [p, c] : row) {
            LieElement im = image_of_basis(d, p);
            im *= c;
            out += im;
        }
    return out;
}

void LieMorphism::validate() const {
    const auto& fl = src_->flie();
    for (const auto& [d, row] : src_->pres().relations) {
        if (d > dst_->max_degree()) continue;
        // expand the relation into nested generator brackets via the free layer
        auto free_image = [&](auto&& self, int dd, int ff) -> LieElement {
            if (dd == 1) return images_.at(ff);
            const auto& fa = fl.layer(dd).fact[ff];
            LieElement l = self(self, fa[0], fa[1]);
            LieElement r = self(self, fa[2], fa[3]);
            return bracket(l, r);
        };
        LieElement acc = dst_->zero();
        for (const auto& [f, c] : row) {
            LieElement im = free_image(free_image, d, f);
            im *= c;
            acc += im;
        }
        if (!acc.is_zero()) {
            std::ostringstream os;
            os << "morphism does not kill relation (degree " << d << ", coords";
            for (const auto& [f, c] : row) os << " " << f << ":" << rat_str(c);
            os << ")";
            throw std::invalid_argument(os.str());
        }
    }
}

// ---------------- operations ----------------

LieElement central_element(const HandlePtr& h) {
    const auto& p = h->pres();
    if (p.family != LiePresentation::Cyclotomic || p.names.size() != 2)
        throw std::invalid_argument("central_element: need arity-2 cyclotomic algebra");
    int i = p.names[0], j = p.names[1];
    LieElement c = h->gen(GenSymbol::t0i(i));
    c += h->gen(GenSymbol::t0i(j));
    for (int al = 0; al < p.gamma_modulus; ++al) c += h->gen(GenSymbol::tij(i, j, al, p.gamma_modulus));
    return c;
}

static void check_disjoint(const std::vector<int>& a, const std::vector<int>& b) {
    std::set<int> s(a.begin(), a.end());
    for (int x : b)
        if (s.count(x)) throw std::invalid_argument("strand name clash: " + std::to_string(x));
}

LieMorphism mop_i_outer(const HandlePtr& outer, int i, const std::vector<int>& J,
                        const HandlePtr& target) {
    const auto& p = outer->pres();
    if (p.family != LiePresentation::Cyclotomic)
        throw std::invalid_argument("mop_i_outer: outer must be cyclotomic");
    if (i == kFrozenStrand) throw std::invalid_argument("mop_compose_i: i = 0 not allowed");
    if (J.empty()) throw std::invalid_argument("mop_compose_i: inner arity must be nonempty");
    if (!std::count(p.names.begin(), p.names.end(), i))
        throw std::invalid_argument("mop_compose_i: i not a strand of the outer algebra");
    std::vector<int> rest;
    for (int x : p.names)
        if (x != i) rest.push_back(x);
    check_disjoint(rest, J);
    int N = p.gamma_modulus;
    std::vector<LieElement> images;
    for (const auto& g : p.gens) {
        LieElement im = target->zero();
        if (g.kind == GenSymbol::T0i) {
            if (g.i != i) {
                im = target->gen(GenSymbol::t0i(g.i));
            } else {
                for (int q : J) im += target->gen(GenSymbol::t0i(q));
                for (size_t a = 0; a < J.size(); ++a)
                    for (size_t b = a + 1; b < J.size(); ++b)
                        for (int ga = 0; ga < N; ++ga)
                            im += target->gen(GenSymbol::tij(J[a], J[b], ga, N));
            }
        } else {  // Tij
            if (g.i != i && g.j != i) {
                im = target->gen(GenSymbol::tij(g.i, g.j, g.alpha, N));
            } else if (g.i == i) {
                for (int r : J) im += target->gen(GenSymbol::tij(r, g.j, g.alpha, N));
            } else {
                for (int r : J) im += target->gen(GenSymbol::tij(g.i, r, g.alpha, N));
            }
        }
        images.push_back(std::move(im));
    }
    return LieMorphism(outer, target, std::move(images));
}

LieMorphism mop_i_inner(const HandlePtr& inner, const HandlePtr& target) {
    const auto& p = inner->pres();
    if (p.family != LiePresentation::Classical)
        throw std::invalid_argument("mop_i_inner: inner must be classical");
    int N = target->pres().gamma_modulus;
    std::vector<LieElement> images;
    for (const auto& g : p.gens) images.push_back(target->gen(GenSymbol::tij(g.i, g.j, 0, N)));
    return LieMorphism(inner, target, std::move(images));
}

LieElement mop_compose_i(const LieElement& a, int i, const std::vector<int>& J) {
    const auto& p = a.alg->pres();
    std::vector<int> tgt_names;
    for (int x : p.names)
        if (x != i) tgt_names.push_back(x);
    tgt_names.insert(tgt_names.end(), J.begin(), J.end());
    std::sort(tgt_names.begin(), tgt_names.end());
    auto target = t_gamma_handle(tgt_names, p.gamma_modulus, a.alg->max_degree());
    return mop_i_outer(a.alg, i, J, target).apply(a);
}

LieMorphism mop_0_outer(const HandlePtr& outer, const std::vector<int>& J, const HandlePtr& target) {
    const auto& p = outer->pres();
    if (p.family != LiePresentation::Cyclotomic)
        throw std::invalid_argument("mop_0_outer: outer must be cyclotomic");
    check_disjoint(p.names, J);
    int N = p.gamma_modulus;
    std::vector<LieElement> images;
    for (const auto& g : p.gens) {
        LieElement im = target->zero();
        if (g.kind == GenSymbol::T0i) {
            im = target->gen(GenSymbol::t0i(g.i));
            for (int j : J)
                for (int ga = 0; ga < N; ++ga) im += target->gen(GenSymbol::tij(j, g.i, ga, N));
        } else {
            im = target->gen(GenSymbol::tij(g.i, g.j, g.alpha, N));
        }
        images.push_back(std::move(im));
    }
    return LieMorphism(outer, target, std::move(images));
}

LieMorphism mop_0_inner(const HandlePtr& inner, const HandlePtr& target) {
    const auto& p = inner->pres();
    if (p.family != LiePresentation::Cyclotomic)
        throw std::invalid_argument("mop_0_inner: inner must be cyclotomic");
    int N = p.gamma_modulus;
    std::vector<LieElement> images;
    for (const auto& g : p.gens) {
        if (g.kind == GenSymbol::T0i)
            images.push_back(target->gen(GenSymbol::t0i(g.i)));
        else
            images.push_back(target->gen(GenSymbol::tij(g.i, g.j, g.alpha, N)));
    }
    return LieMorphism(inner, target, std::move(images));
}

LieElement mop_compose_0(const LieElement& outer, const std::vector<int>& J) {
    const auto& p = outer.alg->pres();
    std::vector<int> tgt_names = p.names;
    tgt_names.insert(tgt_names.end(), J.begin(), J.end());
    std::sort(tgt_names.begin(), tgt_names.end());
    auto target = t_gamma_handle(tgt_names, p.gamma_modulus, outer.alg->max_degree());
    return mop_0_outer(outer.alg, J, target).apply(outer);
}

LieMorphism gamma_map(const HandlePtr& h, const GammaVector& gv) {
    const auto& p = h->pres();
    if (p.family != LiePresentation::Cyclotomic)
        throw std::invalid_argument("gamma_map: cyclotomic algebra required");
    if (gv.modulus != p.gamma_modulus) throw std::invalid_argument("gamma_map: modulus mismatch");
    int N = p.gamma_modulus;
    std::vector<LieElement> images;
    for (const auto& g : p.gens) {
        if (g.kind == GenSymbol::T0i)
            images.push_back(h->gen(g));
        else
            images.push_back(h->gen(GenSymbol::tij(g.i, g.j, g.alpha + gv.at(g.i) - gv.at(g.j), N)));
    }
    return LieMorphism(h, h, std::move(images));
}

LieElement gamma_act(const GammaVector& gv, const LieElement& a) {
    return gamma_map(a.alg, gv).apply(a);
}

LieMorphism rename_map(const HandlePtr& h, const std::map<int, int>& name_map,
                       const HandlePtr& target) {
    const auto& p = h->pres();
    int N = target->pres().gamma_modulus;
    auto ren = [&](int x) {
        auto it = name_map.find(x);
        return it == name_map.end() ? x : it->second;
    };
    std::vector<LieElement> images;
    for (const auto& g : p.gens) {
        if (g.kind == GenSymbol::T0i)
            images.push_back(target->gen(GenSymbol::t0i(ren(g.i))));
        else if (g.kind == GenSymbol::Tij)
            images.push_back(target->gen(GenSymbol::tij(ren(g.i), ren(g.j), g.alpha, N)));
        else
            throw std::invalid_argument("rename_map: free generators have no strands");
    }
    return LieMorphism(h, target, std::move(images));
}

LieMorphism substitution(const HandlePtr& src, const HandlePtr& dst,
                         std::vector<LieElement> gen_images) {
    for (const auto& e : gen_images)
        for (const auto& [d, row] : e.coords)
            if (d != 1 && !row.empty())
                throw std::invalid_argument("substitution: generator images must be degree 1");
    LieMorphism m(src, dst, std::move(gen_images));
    m.validate();
    return m;
}

}  // namespace moperad
