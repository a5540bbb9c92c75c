#include "moperad/solver.hpp"

#include <functional>
#include <sstream>

#include "moperad/linalg.hpp"

namespace moperad {

namespace {

// degree-d part of u keyed by (space index, monomial)
using ResKey = std::pair<int, PbwMonomial>;
using ResVec = std::map<ResKey, Rat>;

void collect_degree(ResVec& out, int space, const UeaElement& u, int d) {
    for (const auto& [m, c] : u.terms)
        if (pbw_monomial_degree(*u.alg, m) == d && c != 0) out[{space, m}] = c;
}

// one unknown block: a Lie element over `h` built from flat coords
struct UnknownBlock {
    HandlePtr h;
    LieElement from_coords(int d, const std::vector<Rat>& x, int offset) const {
        LieElement l = h->zero();
        SparseRow row;
        for (int p = 0; p < h->dim(d); ++p)
            if (x[offset + p] != 0) row.emplace_back(p, x[offset + p]);
        if (!row.empty()) l.coords[d] = row;
        return l;
    }
};

struct DegreeSolveOutcome {
    bool ok = false;
    std::vector<Rat> solution;
    DegreeStats stats;
    std::string detail;
};

// Solves residual(unknowns) == 0 at degree d, where residual is affine in the
// degree-d coordinates of the unknown Lie elements.
DegreeSolveOutcome solve_degree(
    int d, const std::vector<UnknownBlock>& blocks,
    const std::function<std::vector<UeaElement>(const std::vector<LieElement>&)>& residual) {
    DegreeSolveOutcome out;
    int n = 0;
    std::vector<int> offsets;
    for (const auto& b : blocks) {
        offsets.push_back(n);
        n += b.h->dim(d);
    }
    auto eval = [&](const std::vector<Rat>& x) {
        std::vector<LieElement> parts;
        for (size_t k = 0; k < blocks.size(); ++k)
            parts.push_back(blocks[k].from_coords(d, x, offsets[k]));
        std::vector<UeaElement> res = residual(parts);
        ResVec v;
        for (size_t s = 0; s < res.size(); ++s) collect_degree(v, (int)s, res[s], d);
        return v;
    };
    std::vector<Rat> zero(n, Rat(0));
    ResVec r0 = eval(zero);
    std::vector<ResVec> cols(n);
    for (int j = 0; j < n; ++j) {
        std::vector<Rat> x(n, Rat(0));
        x[j] = 1;
        ResVec rj = eval(x);
        // column = rj - r0
        for (const auto& [k, c] : rj) cols[j][k] = c;
        for (const auto& [k, c] : r0) {
            Rat& v = cols[j][k];
            v -= c;
            if (v == 0) cols[j].erase(k);
        }
    }
    // assemble rows over the union of keys
    std::map<ResKey, int> key_row;
    auto row_of = [&](const ResKey& k) {
        auto it = key_row.find(k);
        if (it == key_row.end()) it = key_row.emplace(k, (int)key_row.size()).first;
        return it->second;
    };
    for (const auto& [k, c] : r0) row_of(k);
    for (const auto& col : cols)
        for (const auto& [k, c] : col) row_of(k);
    std::vector<SparseRow> rows(key_row.size());
    std::vector<Rat> rhs(key_row.size(), Rat(0));
    for (const auto& [k, r] : key_row) {
        auto it = r0.find(k);
        if (it != r0.end()) rhs[r] = -it->second;
    }
    for (int j = 0; j < n; ++j)
        for (const auto& [k, c] : cols[j]) rows[key_row.at(k)].emplace_back(j, c);
    for (auto& row : rows)
        std::sort(row.begin(), row.end(), [](auto& a, auto& b) { return a.first < b.first; });
    std::vector<Rat> sol;
    int rank = 0, nullity = 0;
    bool ok = solve_affine(rows, rhs, n, sol, &rank, &nullity);
    out.stats = DegreeStats{d, n, (int)rows.size(), rank, nullity};
    if (!ok) {
        std::ostringstream os;
        os << "inconsistent affine system at degree " << d << ": " << rows.size() << " rows, " << n
           << " unknowns, rank " << rank << "; nonzero rhs entries:";
        int shown = 0;
        for (const auto& [k, r] : key_row) {
            if (rhs[r] != 0 && shown < 12) {
                os << " [space " << k.first << " monomial";
                for (int id : k.second) os << " " << id;
                os << "] = " << rat_str(-rhs[r]);
                ++shown;
            }
        }
        out.detail = os.str();
        return out;
    }
    out.ok = true;
    out.solution = std::move(sol);
    return out;
}

void merge_degree(LieElement& acc, const LieElement& part) {
    for (const auto& [d, row] : part.coords)
        if (!row.empty()) acc.coords[d] = row;
}

}  // namespace

AssocSolveResult solve_associator(const Rat& mu, int D) {
    if (mu == 0) throw std::invalid_argument("solve_associator: mu must be nonzero");
    if (D < 1) throw std::invalid_argument("solve_associator: D >= 1");
    TorsorContext cx = TorsorContext::make(1, D);
    AssocSolveResult out;
    out.tuple.mu = mu;
    LieElement logphi = cx.f2->zero();
    for (int d = 1; d <= D; ++d) {
        auto res = solve_degree(
            d, {UnknownBlock{cx.f2}},
            [&](const std::vector<LieElement>& parts) {
                LieElement l = logphi;
                merge_degree(l, parts[0]);
                AssocTuple t{mu, uea_exp(l.truncated(d), d)};
                return std::vector<UeaElement>{duality_residual(cx, t), hexagon_residual(cx, t),
                                               pentagon_residual(cx, t)};
            });
        out.report.stats.push_back(res.stats);
        if (!res.ok) {
            out.report.obstructed = true;
            out.report.obstruction_degree = d;
            out.report.obstruction_detail = res.detail;
            out.tuple.phi = uea_exp(logphi.truncated(d - 1), D);
            return out;
        }
        merge_degree(logphi, UnknownBlock{cx.f2}.from_coords(d, res.solution, 0));
        out.report.certified_degree = d;
    }
    out.tuple.phi = uea_exp(logphi, D);
    return out;
}

CycSolveResult solve_cyclotomic(const AssocTuple& base, int N, int D) {
    TorsorContext cx = TorsorContext::make(N, D);
    if (base.phi.trunc < D)
        throw std::invalid_argument("solve_cyclotomic: base not certified through D");
    CycSolveResult out;
    out.tuple.N = N;
    out.tuple.base.mu = base.mu;
    out.tuple.base.phi = rebase(base.phi, cx.f2);
    LieElement logpsi = cx.fN1->zero();
    for (int d = 1; d <= D; ++d) {
        auto res = solve_degree(
            d, {UnknownBlock{cx.fN1}},
            [&](const std::vector<LieElement>& parts) {
                LieElement l = logpsi;
                merge_degree(l, parts[0]);
                CycAssocTuple t{AssocTuple{base.mu, rebase(base.phi, cx.f2).truncated(d)},
                                uea_exp(l.truncated(d), d), N};
                return std::vector<UeaElement>{pseudotwist_residual(cx, t),
                                               octogon_residual(cx, t)};
            });
        out.report.stats.push_back(res.stats);
        if (!res.ok) {
            out.report.obstructed = true;
            out.report.obstruction_degree = d;
            out.report.obstruction_detail = res.detail;
            out.tuple.psi = uea_exp(logpsi.truncated(d - 1), D);
            return out;
        }
        merge_degree(logpsi, UnknownBlock{cx.fN1}.from_coords(d, res.solution, 0));
        out.report.certified_degree = d;
    }
    out.tuple.psi = uea_exp(logpsi, D);
    return out;
}

std::optional<GTElement> gt_between(const TorsorContext& cx, const AssocTuple& t,
                                    const AssocTuple& t2) {
    Rat lambda = t2.mu / t.mu;
    LieElement logf = cx.f2->zero();
    for (int d = 1; d <= cx.D; ++d) {
        auto res = solve_degree(d, {UnknownBlock{cx.f2}},
                                [&](const std::vector<LieElement>& parts) {
                                    LieElement l = logf;
                                    merge_degree(l, parts[0]);
                                    GTElement a{lambda, uea_exp(l.truncated(d), cx.D)};
                                    AssocTuple moved = act_gt_on_assoc(cx, a, t);
                                    return std::vector<UeaElement>{moved.phi - t2.phi};
                                });
        if (!res.ok) return std::nullopt;
        merge_degree(logf, UnknownBlock{cx.f2}.from_coords(d, res.solution, 0));
    }
    return GTElement{lambda, uea_exp(logf, cx.D)};
}

std::optional<GTMElement> gtm_between(const TorsorContext& cx, const CycAssocTuple& t,
                                      const CycAssocTuple& t2) {
    Rat lambda = t2.base.mu / t.base.mu;
    LieElement logf = cx.f2->zero(), logg = cx.fN1->zero();
    for (int d = 1; d <= cx.D; ++d) {
        auto res = solve_degree(
            d, {UnknownBlock{cx.f2}, UnknownBlock{cx.fN1}},
            [&](const std::vector<LieElement>& parts) {
                LieElement lf = logf, lg = logg;
                merge_degree(lf, parts[0]);
                merge_degree(lg, parts[1]);
                GTMElement a{GTElement{lambda, uea_exp(lf.truncated(d), cx.D)},
                             uea_exp(lg.truncated(d), cx.D), cx.N};
                CycAssocTuple moved = act_gtm_on_cycassoc(cx, a, t);
                return std::vector<UeaElement>{moved.base.phi - t2.base.phi, moved.psi - t2.psi};
            });
        if (!res.ok) return std::nullopt;
        int nf = cx.f2->dim(d);
        merge_degree(logf, UnknownBlock{cx.f2}.from_coords(d, res.solution, 0));
        merge_degree(logg, UnknownBlock{cx.fN1}.from_coords(d, res.solution, nf));
    }
    return GTMElement{GTElement{lambda, uea_exp(logf, cx.D)}, uea_exp(logg, cx.D), cx.N};
}

std::optional<GRTElement> grt_between(const TorsorContext& cx, const AssocTuple& t,
                                      const AssocTuple& t2) {
    Rat lambda = t2.mu / t.mu;
    LieElement logg = cx.f2->zero();
    for (int d = 1; d <= cx.D; ++d) {
        auto res = solve_degree(d, {UnknownBlock{cx.f2}},
                                [&](const std::vector<LieElement>& parts) {
                                    LieElement l = logg;
                                    merge_degree(l, parts[0]);
                                    GRTElement b{lambda, uea_exp(l.truncated(d), cx.D)};
                                    AssocTuple moved = act_assoc_grt(cx, t, b);
                                    return std::vector<UeaElement>{moved.phi - t2.phi};
                                });
        if (!res.ok) return std::nullopt;
        merge_degree(logg, UnknownBlock{cx.f2}.from_coords(d, res.solution, 0));
    }
    return GRTElement{lambda, uea_exp(logg, cx.D)};
}

std::optional<GRTGammaElement> grtgamma_between(const TorsorContext& cx, const CycAssocTuple& t,
                                                const CycAssocTuple& t2) {
    Rat lambda = t2.base.mu / t.base.mu;
    LieElement logg = cx.f2->zero(), logh = cx.fN1->zero();
    for (int d = 1; d <= cx.D; ++d) {
        auto res = solve_degree(
            d, {UnknownBlock{cx.f2}, UnknownBlock{cx.fN1}},
            [&](const std::vector<LieElement>& parts) {
                LieElement lg = logg, lh = logh;
                merge_degree(lg, parts[0]);
                merge_degree(lh, parts[1]);
                GRTGammaElement b{lambda, uea_exp(lg.truncated(d), cx.D),
                                  uea_exp(lh.truncated(d), cx.D), cx.N};
                CycAssocTuple moved = act_cycassoc_grtgamma(cx, t, b);
                return std::vector<UeaElement>{moved.base.phi - t2.base.phi, moved.psi - t2.psi};
            });
        if (!res.ok) return std::nullopt;
        int ng = cx.f2->dim(d);
        merge_degree(logg, UnknownBlock{cx.f2}.from_coords(d, res.solution, 0));
        merge_degree(logh, UnknownBlock{cx.fN1}.from_coords(d, res.solution, ng));
    }
    return GRTGammaElement{lambda, uea_exp(logg, cx.D), uea_exp(logh, cx.D), cx.N};
}

std::optional<UeaElement> gauge_between(const TorsorContext& cx, const CycAssocTuple& t,
                                        const CycAssocTuple& t2) {
    if (!(t.base.phi == t2.base.phi) || t.base.mu != t2.base.mu) return std::nullopt;
    LieElement logh = cx.fN1->zero();
    for (int d = 1; d <= cx.D; ++d) {
        auto res = solve_degree(
            d, {UnknownBlock{cx.fN1}},
            [&](const std::vector<LieElement>& parts) {
                LieElement lh = logh;
                merge_degree(lh, parts[0]);
                GRTGammaElement b{Rat(1), uea_one(cx.f2, cx.D), uea_exp(lh.truncated(d), cx.D),
                                  cx.N};
                CycAssocTuple moved = act_cycassoc_grtgamma(cx, t, b);
                return std::vector<UeaElement>{moved.psi - t2.psi};
            });
        if (!res.ok) return std::nullopt;
        merge_degree(logh, UnknownBlock{cx.fN1}.from_coords(d, res.solution, 0));
    }
    return uea_exp(logh, cx.D);
}

int gt_stabilizer_nullity(const TorsorContext& cx, const AssocTuple& t) {
    int total = 0;
    LieElement logf = cx.f2->zero();
    for (int d = 1; d <= cx.D; ++d) {
        auto res = solve_degree(d, {UnknownBlock{cx.f2}},
                                [&](const std::vector<LieElement>& parts) {
                                    LieElement l = logf;
                                    merge_degree(l, parts[0]);
                                    GTElement a{Rat(1), uea_exp(l.truncated(d), cx.D)};
                                    AssocTuple moved = act_gt_on_assoc(cx, a, t);
                                    return std::vector<UeaElement>{moved.phi - t.phi};
                                });
        if (!res.ok) return -1;
        total += res.stats.nullity;
        merge_degree(logf, UnknownBlock{cx.f2}.from_coords(d, res.solution, 0));
    }
    return total;
}

int gtm_stabilizer_nullity(const TorsorContext& cx, const CycAssocTuple& t) {
    int total = 0;
    LieElement logf = cx.f2->zero(), logg = cx.fN1->zero();
    for (int d = 1; d <= cx.D; ++d) {
        auto res = solve_degree(
            d, {UnknownBlock{cx.f2}, UnknownBlock{cx.fN1}},
            [&](const std::vector<LieElement>& parts) {
                LieElement lf = logf, lg = logg;
                merge_degree(lf, parts[0]);
                merge_degree(lg, parts[1]);
                GTMElement a{GTElement{Rat(1), uea_exp(lf.truncated(d), cx.D)},
                             uea_exp(lg.truncated(d), cx.D), cx.N};
                CycAssocTuple moved = act_gtm_on_cycassoc(cx, a, t);
                return std::vector<UeaElement>{moved.base.phi - t.base.phi, moved.psi - t.psi};
            });
        if (!res.ok) return -1;
        total += res.stats.nullity;
        int nf = cx.f2->dim(d);
        merge_degree(logf, UnknownBlock{cx.f2}.from_coords(d, res.solution, 0));
        merge_degree(logg, UnknownBlock{cx.fN1}.from_coords(d, res.solution, nf));
    }
    return total;
}

}  // namespace moperad
