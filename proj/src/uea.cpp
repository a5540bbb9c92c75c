#include "moperad/uea.hpp"

#include <algorithm>
#include <stdexcept>

namespace moperad {

int lie_basis_offset(const LieAlgebraHandle& h, int degree) {
    int off = 0;
    for (int d = 1; d < degree; ++d) off += h.dim(d);
    return off;
}

int lie_basis_degree(const LieAlgebraHandle& h, int id) {
    int off = 0;
    for (int d = 1; d <= h.max_degree(); ++d) {
        off += h.dim(d);
        if (id < off) return d;
    }
    throw std::out_of_range("lie_basis_degree");
}

int pbw_monomial_degree(const LieAlgebraHandle& h, const PbwMonomial& m) {
    int deg = 0;
    for (int id : m) deg += lie_basis_degree(h, id);
    return deg;
}

Rat UeaElement::unit_coeff() const {
    auto it = terms.find(PbwMonomial{});
    return it == terms.end() ? Rat(0) : it->second;
}

static void check_same(const UeaElement& a, const UeaElement& b) {
    if (!a.alg || !b.alg || a.alg->signature() != b.alg->signature())
        throw std::invalid_argument("UeaElement: handle mismatch");
}

UeaElement& UeaElement::operator+=(const UeaElement& o) {
    check_same(*this, o);
    int t = std::min(trunc, o.trunc);
    if (t < trunc) *this = truncated(t);
    trunc = t;
    for (const auto& [m, c] : o.terms) {
        if (pbw_monomial_degree(*alg, m) > t) continue;
        Rat& x = terms[m];
        x += c;
        if (x == 0) terms.erase(m);
    }
    return *this;
}

UeaElement& UeaElement::operator-=(const UeaElement& o) {
    check_same(*this, o);
    int t = std::min(trunc, o.trunc);
    if (t < trunc) *this = truncated(t);
    trunc = t;
    for (const auto& [m, c] : o.terms) {
        if (pbw_monomial_degree(*alg, m) > t) continue;
        Rat& x = terms[m];
        x -= c;
        if (x == 0) terms.erase(m);
    }
    return *this;
}

UeaElement& UeaElement::operator*=(const Rat& c) {
    if (c == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [m, v] : terms) v *= c;
    return *this;
}

bool UeaElement::operator==(const UeaElement& o) const {
    UeaElement d = *this;
    d -= o;
    return d.is_zero();
}

UeaElement UeaElement::truncated(int degree) const {
    UeaElement out{alg, std::min(degree, trunc), {}};
    for (const auto& [m, c] : terms)
        if (pbw_monomial_degree(*alg, m) <= out.trunc) out.terms.emplace(m, c);
    return out;
}

UeaElement UeaElement::dilated(const Rat& lambda) const {
    UeaElement out{alg, trunc, {}};
    for (const auto& [m, c] : terms) {
        Rat v = c * rat_pow(lambda, pbw_monomial_degree(*alg, m));
        if (v != 0) out.terms.emplace(m, v);
    }
    return out;
}

UeaElement uea_zero(const HandlePtr& h, int trunc) { return UeaElement{h, trunc, {}}; }

UeaElement uea_one(const HandlePtr& h, int trunc) {
    UeaElement u{h, trunc, {}};
    u.terms[PbwMonomial{}] = 1;
    return u;
}

UeaElement uea_from_lie(const LieElement& a, int trunc) {
    UeaElement u{a.alg, trunc, {}};
    for (const auto& [d, row] : a.coords) {
        if (d > trunc) continue;
        int off = lie_basis_offset(*a.alg, d);
        for (const auto& [p, c] : row) u.terms[PbwMonomial{off + p}] = c;
    }
    return u;
}

LieElement lie_part(const UeaElement& u) {
    LieElement a{u.alg, {}};
    for (const auto& [m, c] : u.terms) {
        if (m.size() != 1) continue;
        int d = lie_basis_degree(*u.alg, m[0]);
        int p = m[0] - lie_basis_offset(*u.alg, d);
        a.coords[d].emplace_back(p, c);
    }
    for (auto& [d, row] : a.coords)
        std::sort(row.begin(), row.end(), [](auto& x, auto& y) { return x.first < y.first; });
    return a;
}

bool is_grouplike(const UeaElement& u) {
    if (u.unit_coeff() != 1) return false;
    UeaElement l = u;
    l.terms.erase(PbwMonomial{});
    // log(1+n) = sum (-1)^{k+1} n^k / k
    UeaElement acc = uea_zero(u.alg, u.trunc);
    UeaElement p = uea_one(u.alg, u.trunc);
    for (int k = 1; k <= u.trunc; ++k) {
        p = multiply(p, l);
        if (p.is_zero()) break;
        UeaElement t = p;
        t *= Rat((k % 2) ? 1 : -1, k);
        acc += t;
    }
    for (const auto& [m, c] : acc.terms)
        if (m.size() != 1 && c != 0) return false;
    return true;
}

// straightening: put concatenated monomials into non-decreasing order using
// e_i e_j = e_j e_i + [e_i, e_j]
static void straighten_into(const LieAlgebraHandle& H, PbwMonomial mono, Rat coeff, int trunc,
                            std::map<PbwMonomial, Rat>& out) {
    std::vector<std::pair<PbwMonomial, Rat>> stack;
    stack.emplace_back(std::move(mono), std::move(coeff));
    while (!stack.empty()) {
        auto [m, c] = std::move(stack.back());
        stack.pop_back();
        size_t k = 0;
        bool sorted = true;
        for (size_t t = 0; t + 1 < m.size(); ++t)
            if (m[t] > m[t + 1]) {
                k = t;
                sorted = false;
                break;
            }
        if (sorted) {
            Rat& x = out[m];
            x += c;
            if (x == 0) out.erase(m);
            continue;
        }
        int a = m[k], b = m[k + 1];
        PbwMonomial swapped = m;
        std::swap(swapped[k], swapped[k + 1]);
        stack.emplace_back(std::move(swapped), c);
        // bracket term
        int da = lie_basis_degree(H, a), db = lie_basis_degree(H, b);
        int pa = a - lie_basis_offset(H, da), pb = b - lie_basis_offset(H, db);
        if (da + db <= H.max_degree()) {
            const SparseRow& br = H.basis_bracket(da, pa, db, pb);
            int off = lie_basis_offset(H, da + db);
            for (const auto& [p, v] : br) {
                PbwMonomial with;
                with.reserve(m.size() - 1);
                with.insert(with.end(), m.begin(), m.begin() + k);
                with.push_back(off + p);
                with.insert(with.end(), m.begin() + k + 2, m.end());
                if (pbw_monomial_degree(H, with) <= trunc) stack.emplace_back(std::move(with), c * v);
            }
        }
    }
}

UeaElement multiply(const UeaElement& a, const UeaElement& b) {
    check_same(a, b);
    int t = std::min(a.trunc, b.trunc);
    UeaElement out{a.alg, t, {}};
    const auto& H = *a.alg;
    for (const auto& [ma, ca] : a.terms) {
        int da = pbw_monomial_degree(H, ma);
        if (da > t) continue;
        for (const auto& [mb, cb] : b.terms) {
            if (da + pbw_monomial_degree(H, mb) > t) continue;
            PbwMonomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            straighten_into(H, std::move(m), ca * cb, t, out.terms);
        }
    }
    return out;
}

UeaElement uea_pow(const UeaElement& a, long k) {
    if (k < 0) return uea_pow(uea_inverse(a), -k);
    UeaElement acc = uea_one(a.alg, a.trunc);
    for (long i = 0; i < k; ++i) acc = multiply(acc, a);
    return acc;
}

UeaElement uea_inverse(const UeaElement& a) {
    Rat u = a.unit_coeff();
    if (u == 0) throw std::invalid_argument("uea_inverse: unit coefficient is zero");
    UeaElement n = a;
    n *= 1 / u;
    n.terms.erase(PbwMonomial{});
    // (1+n)^{-1} = sum (-n)^k
    UeaElement acc = uea_one(a.alg, a.trunc);
    UeaElement p = uea_one(a.alg, a.trunc);
    for (int k = 1; k <= a.trunc; ++k) {
        p = multiply(p, n);
        if (p.is_zero()) break;
        UeaElement t = p;
        t *= Rat((k % 2) ? -1 : 1);
        acc += t;
    }
    acc *= 1 / u;
    return acc;
}

UeaElement uea_exp(const LieElement& a, int trunc) {
    for (const auto& [d, row] : a.coords)
        if (d == 0 && !row.empty()) throw std::invalid_argument("uea_exp: degree-0 part");
    UeaElement x = uea_from_lie(a, trunc);
    UeaElement acc = uea_one(a.alg, trunc);
    UeaElement p = uea_one(a.alg, trunc);
    Rat fact(1);
    for (int k = 1; k <= trunc; ++k) {
        p = multiply(p, x);
        if (p.is_zero()) break;
        fact *= k;
        UeaElement t = p;
        t *= 1 / fact;
        acc += t;
    }
    return acc;
}

LieElement uea_log(const UeaElement& g) {
    if (g.unit_coeff() != 1) throw std::invalid_argument("uea_log: unit coefficient must be 1");
    UeaElement n = g;
    n.terms.erase(PbwMonomial{});
    UeaElement acc = uea_zero(g.alg, g.trunc);
    UeaElement p = uea_one(g.alg, g.trunc);
    for (int k = 1; k <= g.trunc; ++k) {
        p = multiply(p, n);
        if (p.is_zero()) break;
        UeaElement t = p;
        t *= Rat((k % 2) ? 1 : -1, k);
        acc += t;
    }
    for (const auto& [m, c] : acc.terms)
        if (m.size() != 1 && c != 0)
            throw std::invalid_argument("uea_log: element is not group-like");
    return lie_part(acc);
}

UeaElement grouplike_pow(const UeaElement& g, const Rat& c) {
    LieElement l = uea_log(g);
    l *= c;
    return uea_exp(l, g.trunc);
}

UeaElement Ad(const UeaElement& g, const UeaElement& a) {
    return multiply(multiply(g, a), uea_inverse(g));
}

UeaElement rebase(const UeaElement& u, const HandlePtr& new_handle) {
    if (u.alg->pres().signature() != new_handle->pres().signature())
        throw std::invalid_argument("rebase: different presentations");
    UeaElement out{new_handle, std::min(u.trunc, new_handle->max_degree()), {}};
    for (const auto& [m, c] : u.terms)
        if (pbw_monomial_degree(*u.alg, m) <= out.trunc) out.terms.emplace(m, c);
    return out;
}

UeaElement apply_lie_morphism(const LieMorphism& m, const UeaElement& u) {
    UeaElement out = uea_zero(m.dst(), u.trunc);
    std::map<int, UeaElement> ucache;
    for (const auto& [mono, c] : u.terms) {
        UeaElement prod = uea_one(m.dst(), u.trunc);
        for (int id : mono) {
            auto it = ucache.find(id);
            if (it == ucache.end()) {
                int d = lie_basis_degree(*u.alg, id);
                int p = id - lie_basis_offset(*u.alg, d);
                it = ucache.emplace(id, uea_from_lie(m.image_of_basis(d, p), u.trunc)).first;
            }
            prod = multiply(prod, it->second);
            if (prod.is_zero()) break;
        }
        prod *= c;
        out += prod;
    }
    return out;
}

UeaMorphism::UeaMorphism(HandlePtr src, HandlePtr dst, std::vector<LieElement> gen_images, int trunc)
    : src_(std::move(src)), dst_(std::move(dst)), images_(std::move(gen_images)), trunc_(trunc) {
    if (src_->pres().family != LiePresentation::Free)
        throw std::invalid_argument("UeaMorphism: source must be a free handle");
    if ((int)images_.size() != src_->num_gens())
        throw std::invalid_argument("UeaMorphism: wrong argument count");
}

LieElement UeaMorphism::lie_image(int id) const {
    auto it = lie_cache_.find(id);
    if (it != lie_cache_.end()) return it->second;
    int d = lie_basis_degree(*src_, id);
    int p = id - lie_basis_offset(*src_, d);
    LieElement res;
    if (d == 1) {
        res = images_.at(src_->basis_free_index(1, p));
    } else {
        int f = src_->basis_free_index(d, p);
        auto free_image = [&](auto&& self, int dd, int ff) -> LieElement {
            if (dd == 1) return images_.at(ff);
            const auto& fa = src_->flie().layer(dd).fact[ff];
            return bracket(self(self, fa[0], fa[1]), self(self, fa[2], fa[3]));
        };
        res = free_image(free_image, d, f);
    }
    res = res.truncated(trunc_);
    return lie_cache_.emplace(id, std::move(res)).first->second;
}

UeaElement UeaMorphism::apply(const UeaElement& u) const {
    UeaElement out = uea_zero(dst_, trunc_);
    for (const auto& [m, c] : u.terms) {
        UeaElement prod = uea_one(dst_, trunc_);
        bool dead = false;
        for (int id : m) {
            auto uit = u_cache_.find(id);
            if (uit == u_cache_.end())
                uit = u_cache_.emplace(id, uea_from_lie(lie_image(id), trunc_)).first;
            prod = multiply(prod, uit->second);
            if (prod.is_zero()) {
                dead = true;
                break;
            }
        }
        if (dead) continue;
        prod *= c;
        out += prod;
    }
    return out;
}

UeaElement group_substitute(const UeaElement& f, const HandlePtr& target,
                            const std::vector<UeaElement>& args) {
    if (f.alg->pres().family != LiePresentation::Free)
        throw std::invalid_argument("group_substitute: f must live over a free handle");
    if ((int)args.size() != f.alg->num_gens())
        throw std::invalid_argument("group_substitute: wrong argument count");
    int t = f.trunc;
    std::vector<LieElement> logs;
    for (const auto& a : args) {
        if (a.alg->signature() != target->signature())
            throw std::invalid_argument("group_substitute: argument handle mismatch");
        t = std::min(t, a.trunc);
        logs.push_back(uea_log(a));
    }
    UeaMorphism m(f.alg, target, std::move(logs), t);
    return m.apply(f.truncated(t));
}

UeaElement kernel_embed_phiN(const UeaElement& g, int N, const HandlePtr& f2, int trunc) {
    if (N < 1) throw std::invalid_argument("kernel_embed_phiN: N >= 1");
    if (f2->num_gens() != 2) throw std::invalid_argument("kernel_embed_phiN: target must be f_2");
    UeaElement ex = uea_exp(f2->gen(0), trunc);
    UeaElement ey = uea_exp(f2->gen(1), trunc);
    std::vector<UeaElement> args;
    args.push_back(uea_pow(ex, N));
    for (int a = 0; a < N; ++a)
        args.push_back(multiply(multiply(uea_pow(ex, -a), ey), uea_pow(ex, a)));
    return group_substitute(g, f2, args);
}

}  // namespace moperad
