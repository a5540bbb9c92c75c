#include "moperad/torsor.hpp"

#include <sstream>
#include <stdexcept>

namespace moperad {

TorsorContext TorsorContext::make(int N, int D) {
    TorsorContext cx;
    cx.N = N;
    cx.D = D;
    cx.f2 = free_handle(2, D);
    cx.fN1 = free_handle(N + 1, D);
    cx.t3 = t_handle({1, 2, 3}, D);
    cx.t4 = t_handle({1, 2, 3, 4}, D);
    cx.t3g = t_gamma_handle({1, 2, 3}, N, D);
    return cx;
}

GTElement gt_identity(const TorsorContext& cx) { return {Rat(1), uea_one(cx.f2, cx.D)}; }
GTMElement gtm_identity(const TorsorContext& cx) {
    return {gt_identity(cx), uea_one(cx.fN1, cx.D), cx.N};
}
GRTElement grt_identity(const TorsorContext& cx) { return {Rat(1), uea_one(cx.f2, cx.D)}; }
GRTGammaElement grtgamma_identity(const TorsorContext& cx) {
    return {Rat(1), uea_one(cx.f2, cx.D), uea_one(cx.fN1, cx.D), cx.N};
}

int first_nonzero_degree(const UeaElement& u) {
    int best = 0;
    for (const auto& [m, c] : u.terms) {
        if (c == 0) continue;
        int d = pbw_monomial_degree(*u.alg, m);
        if (best == 0 || d < best) best = d;
    }
    return best;
}

namespace {

UeaElement exp_gen(const HandlePtr& h, int idx, int D, const Rat& coeff = Rat(1)) {
    LieElement g = h->gen(idx);
    g *= coeff;
    return uea_exp(g, D);
}

// f(u, v) for f over f2
UeaElement eval2(const HandlePtr&, const UeaElement& f, const UeaElement& u, const UeaElement& v) {
    return group_substitute(f, u.alg, {u, v});
}

LieElement t02bar_lie(const TorsorContext& cx) {
    // in bar-t_2^Gamma: t_02 = -t_01 - sum_a t^a_12 = -(X + sum y(a))
    LieElement s = cx.fN1->gen(0);
    for (int a = 0; a < cx.N; ++a) s += cx.fN1->gen(1 + a);
    s *= Rat(-1);
    return s;
}

// psi(t_02 | t^{-0}, t^{-1}, ...): the strand swap 1 <-> 2 in bar-t_2^Gamma
UeaElement swap_subst(const TorsorContext& cx, const UeaElement& u) {
    std::vector<UeaElement> args;
    args.push_back(uea_exp(t02bar_lie(cx), cx.D));
    for (int a = 0; a < cx.N; ++a) args.push_back(exp_gen(cx.fN1, 1 + ((cx.N - a) % cx.N), cx.D));
    return group_substitute(u, cx.fN1, args);
}

// alpha = (0,gamma) acting on bar-t_2^Gamma: y(a) -> y(a - gamma)
UeaElement alpha_subst(const TorsorContext& cx, const UeaElement& u, int gamma) {
    std::vector<UeaElement> args;
    args.push_back(exp_gen(cx.fN1, 0, cx.D));
    for (int a = 0; a < cx.N; ++a)
        args.push_back(exp_gen(cx.fN1, 1 + (((a - gamma) % cx.N + cx.N) % cx.N), cx.D));
    return group_substitute(u, cx.fN1, args);
}

}  // namespace

UeaElement shift_subst(const TorsorContext& cx, const UeaElement& u, int a) {
    std::vector<UeaElement> args;
    args.push_back(exp_gen(cx.fN1, 0, cx.D));
    for (int b = 0; b < cx.N; ++b) args.push_back(exp_gen(cx.fN1, 1 + ((b + a) % cx.N), cx.D));
    return group_substitute(u, cx.fN1, args);
}

UeaElement shift_subst_group(const TorsorContext& cx, const UeaElement& u, int a) {
    std::vector<UeaElement> args;
    args.push_back(exp_gen(cx.fN1, 0, cx.D));
    for (int b = 0; b < cx.N; ++b) {
        int q = (b + a) / cx.N, r = (b + a) % cx.N;
        UeaElement arg = exp_gen(cx.fN1, 1 + r, cx.D);
        if (q != 0) {
            UeaElement Xq = exp_gen(cx.fN1, 0, cx.D, Rat(q));
            arg = multiply(multiply(Xq, arg), uea_inverse(Xq));
        }
        args.push_back(arg);
    }
    return group_substitute(u, cx.fN1, args);
}

// ---------------- group laws ----------------

GTElement gt_compose(const TorsorContext& cx, const GTElement& a, const GTElement& b,
                     GtLawVariant variant) {
    UeaElement x_pow = exp_gen(cx.f2, 0, cx.D, b.lambda);
    UeaElement y_pow = exp_gen(cx.f2, 1, cx.D, b.lambda);
    UeaElement f;
    if (variant == GtLawVariant::PowerFirst) {
        UeaElement second = Ad(b.f, y_pow);
        f = multiply(eval2(cx.f2, a.f, x_pow, second), b.f);
    } else {
        UeaElement first = multiply(multiply(uea_inverse(b.f), x_pow), b.f);
        f = multiply(eval2(cx.f2, a.f, first, y_pow), b.f);
    }
    return {a.lambda * b.lambda, f};
}

GTMElement gtm_compose(const TorsorContext& cx, const GTMElement& a, const GTMElement& b) {
    GTMElement out;
    out.N = cx.N;
    out.base = gt_compose(cx, a.base, b.base);
    Rat mu2 = (b.base.lambda - 1) / cx.N;
    std::vector<UeaElement> args;
    args.push_back(exp_gen(cx.fN1, 0, cx.D, b.base.lambda));  // X^{lambda_2}
    for (int s = 0; s < cx.N; ++s) {
        UeaElement conj =
            multiply(exp_gen(cx.fN1, 0, cx.D, Rat(s) * mu2), shift_subst_group(cx, b.g, s));
        args.push_back(Ad(conj, exp_gen(cx.fN1, 1 + s, cx.D, b.base.lambda)));
    }
    out.g = multiply(group_substitute(a.g, cx.fN1, args), b.g);
    return out;
}

namespace {

// GRT_1 product g1 * g2 = g1(x, Ad(g2)(y)) g2
UeaElement grt1_mul(const TorsorContext& cx, const UeaElement& g1, const UeaElement& g2) {
    UeaElement x = exp_gen(cx.f2, 0, cx.D);
    UeaElement y = exp_gen(cx.f2, 1, cx.D);
    return multiply(eval2(cx.f2, g1, x, Ad(g2, y)), g2);
}

// cyclotomic analogue: h1(X | Ad(h2^{(a)})(y(a))) h2
UeaElement grtg_mul(const TorsorContext& cx, const UeaElement& h1, const UeaElement& h2) {
    std::vector<UeaElement> args;
    args.push_back(exp_gen(cx.fN1, 0, cx.D));
    for (int a = 0; a < cx.N; ++a)
        args.push_back(Ad(shift_subst(cx, h2, a), exp_gen(cx.fN1, 1 + a, cx.D)));
    return multiply(group_substitute(h1, cx.fN1, args), h2);
}

}  // namespace

GRTElement grt_compose(const TorsorContext& cx, const GRTElement& a, const GRTElement& b) {
    // semidirect with the rescaling action: (l1, g1)(l2, g2) = (l1 l2, (l2.g1) * g2)
    return {a.lambda * b.lambda, grt1_mul(cx, a.g.dilated(b.lambda), b.g)};
}

GRTGammaElement grtgamma_compose(const TorsorContext& cx, const GRTGammaElement& a,
                                 const GRTGammaElement& b) {
    GRTGammaElement out;
    out.N = cx.N;
    out.lambda = a.lambda * b.lambda;
    out.g = grt1_mul(cx, a.g.dilated(b.lambda), b.g);
    out.h = grtg_mul(cx, a.h.dilated(b.lambda), b.h);
    return out;
}

// ---------------- torsor actions ----------------

AssocTuple act_gt_on_assoc(const TorsorContext& cx, const GTElement& a, const AssocTuple& t) {
    UeaElement ex = exp_gen(cx.f2, 0, cx.D, t.mu);
    UeaElement ey = exp_gen(cx.f2, 1, cx.D, t.mu);
    UeaElement f_at = eval2(cx.f2, a.f, ex, Ad(t.phi, ey));
    return {a.lambda * t.mu, multiply(f_at, t.phi)};
}

AssocTuple act_assoc_grt(const TorsorContext& cx, const AssocTuple& t, const GRTElement& b) {
    UeaElement ex = exp_gen(cx.f2, 0, cx.D, b.lambda);
    UeaElement ey = exp_gen(cx.f2, 1, cx.D, b.lambda);
    UeaElement phi2 = eval2(cx.f2, t.phi, ex, Ad(b.g, ey));
    return {b.lambda * t.mu, multiply(phi2, b.g)};
}

CycAssocTuple act_gtm_on_cycassoc(const TorsorContext& cx, const GTMElement& a,
                                  const CycAssocTuple& t) {
    CycAssocTuple out;
    out.N = cx.N;
    out.base = act_gt_on_assoc(cx, a.base, t.base);
    const Rat& mu = t.base.mu;
    std::vector<UeaElement> args;
    args.push_back(exp_gen(cx.fN1, 0, cx.D, mu));  // G(X) = e^{mu X}
    for (int s = 0; s < cx.N; ++s) {
        UeaElement conj =
            multiply(exp_gen(cx.fN1, 0, cx.D, Rat(s) * mu / cx.N), shift_subst(cx, t.psi, s));
        args.push_back(Ad(conj, exp_gen(cx.fN1, 1 + s, cx.D, mu)));
    }
    out.psi = multiply(group_substitute(a.g, cx.fN1, args), t.psi);
    return out;
}

CycAssocTuple act_cycassoc_grtgamma(const TorsorContext& cx, const CycAssocTuple& t,
                                    const GRTGammaElement& b) {
    CycAssocTuple out;
    out.N = cx.N;
    out.base = act_assoc_grt(cx, t.base, GRTElement{b.lambda, b.g});
    std::vector<UeaElement> args;
    args.push_back(exp_gen(cx.fN1, 0, cx.D, b.lambda));
    for (int a = 0; a < cx.N; ++a)
        args.push_back(Ad(shift_subst(cx, b.h, a), exp_gen(cx.fN1, 1 + a, cx.D, b.lambda)));
    out.psi = multiply(group_substitute(t.psi, cx.fN1, args), b.h);
    return out;
}

// ---------------- residuals ----------------

UeaElement duality_residual(const TorsorContext& cx, const AssocTuple& t) {
    UeaElement fyx =
        group_substitute(t.phi, cx.f2, {exp_gen(cx.f2, 1, cx.D), exp_gen(cx.f2, 0, cx.D)});
    return multiply(t.phi, fyx) - uea_one(cx.f2, cx.D);
}

UeaElement hexagon_residual(const TorsorContext& cx, const AssocTuple& t) {
    auto gen = [&](int i, int j) { return cx.t3->gen(GenSymbol::tij(i, j, 0, 1)); };
    auto phi_at = [&](const LieElement& u, const LieElement& v) {
        return group_substitute(t.phi, cx.t3, {uea_exp(u, cx.D), uea_exp(v, cx.D)});
    };
    auto half = [&](const LieElement& u) {
        LieElement l = u;
        l *= t.mu / 2;
        return uea_exp(l, cx.D);
    };
    UeaElement lhs = phi_at(gen(1, 2), gen(2, 3));
    lhs = multiply(lhs, half(gen(2, 3)));
    lhs = multiply(lhs, phi_at(gen(2, 3), gen(1, 3)));
    lhs = multiply(lhs, half(gen(1, 3)));
    lhs = multiply(lhs, phi_at(gen(1, 3), gen(1, 2)));
    lhs = multiply(lhs, half(gen(1, 2)));
    LieElement s = gen(1, 2) + gen(1, 3) + gen(2, 3);
    s *= t.mu / 2;
    UeaElement rhs = uea_exp(s, cx.D);
    return lhs - rhs;
}

UeaElement pentagon_residual(const TorsorContext& cx, const AssocTuple& t) {
    auto gen = [&](int i, int j) { return cx.t4->gen(GenSymbol::tij(i, j, 0, 1)); };
    auto phi_at = [&](const LieElement& u, const LieElement& v) {
        return group_substitute(t.phi, cx.t4, {uea_exp(u, cx.D), uea_exp(v, cx.D)});
    };
    UeaElement lhs = phi_at(gen(1, 2), gen(2, 3));
    lhs = multiply(lhs, phi_at(gen(1, 2) + gen(1, 3), gen(2, 4) + gen(3, 4)));
    lhs = multiply(lhs, phi_at(gen(2, 3), gen(3, 4)));
    UeaElement rhs = phi_at(gen(1, 3) + gen(2, 3), gen(3, 4));
    rhs = multiply(rhs, phi_at(gen(1, 2), gen(2, 3) + gen(2, 4)));
    return lhs - rhs;
}

UeaElement pseudotwist_residual(const TorsorContext& cx, const CycAssocTuple& t) {
    int N = cx.N;
    auto t0 = [&](int i) { return cx.t3g->gen(GenSymbol::t0i(i)); };
    auto tg = [&](int i, int j, int a) { return cx.t3g->gen(GenSymbol::tij(i, j, a, N)); };
    auto psi_at = [&](const LieElement& X, const std::vector<LieElement>& ys) {
        std::vector<UeaElement> args{uea_exp(X, cx.D)};
        for (const auto& y : ys) args.push_back(uea_exp(y, cx.D));
        return group_substitute(t.psi, cx.t3g, args);
    };
    LieElement sum12 = cx.t3g->zero();
    for (int g = 0; g < N; ++g) sum12 += tg(1, 2, g);
    std::vector<LieElement> y23, y12_13, y12, y13_23;
    for (int a = 0; a < N; ++a) {
        y23.push_back(tg(2, 3, a));
        y12_13.push_back(tg(1, 2, a) + tg(1, 3, a));
        y12.push_back(tg(1, 2, a));
        y13_23.push_back(tg(1, 3, a) + tg(2, 3, a));
    }
    UeaElement lhs = psi_at(t0(2) + sum12, y23);            // psi^{01,2,3}
    lhs = multiply(lhs, psi_at(t0(1), y12_13));             // psi^{0,1,23}
    UeaElement rhs = psi_at(t0(1), y12);                    // psi^{0,1,2}
    rhs = multiply(rhs, psi_at(t0(1) + t0(2) + sum12, y13_23));  // psi^{0,12,3}
    UeaElement phi123 = group_substitute(
        t.base.phi, cx.t3g, {uea_exp(tg(1, 2, 0), cx.D), uea_exp(tg(2, 3, 0), cx.D)});
    rhs = multiply(rhs, phi123);
    return lhs - rhs;
}

UeaElement octogon_residual(const TorsorContext& cx, const CycAssocTuple& t, int gamma_variant) {
    const Rat& mu = t.base.mu;
    UeaElement psi_swapped = swap_subst(cx, t.psi);
    UeaElement eX = exp_gen(cx.fN1, 0, cx.D, mu / cx.N);
    UeaElement ey0 = exp_gen(cx.fN1, 1, cx.D, mu / 2);
    LieElement t02 = t02bar_lie(cx);
    t02 *= mu / cx.N;
    UeaElement e02 = uea_exp(t02, cx.D);
    UeaElement tail = multiply(multiply(psi_swapped, ey0), uea_inverse(t.psi));
    UeaElement lhs = eX;
    lhs = multiply(lhs, t.psi);
    lhs = multiply(lhs, ey0);
    lhs = multiply(lhs, uea_inverse(psi_swapped));
    lhs = multiply(lhs, e02);
    lhs = multiply(lhs, alpha_subst(cx, tail, gamma_variant));
    return lhs - uea_one(cx.fN1, cx.D);
}

// ---------------- validators ----------------

void ValidationReport::add(CheckLine line) {
    pass = pass && line.pass;
    lines.push_back(std::move(line));
}

namespace {

CheckLine line_from_residual(const std::string& id, const UeaElement& r) {
    CheckLine l;
    l.id = id;
    int d = first_nonzero_degree(r);
    l.pass = (d == 0) && r.is_zero();
    if (!l.pass) {
        l.first_fail_degree = d;
        std::ostringstream os;
        os << "first failing degree " << d;
        l.detail = os.str();
    }
    return l;
}

CheckLine plain_line(const std::string& id, bool pass, const std::string& detail = "") {
    return CheckLine{id, pass, -1, detail};
}

}  // namespace

ValidationReport validate_assoc(const TorsorContext& cx, const AssocTuple& t) {
    ValidationReport rep;
    rep.add(plain_line("mu-nonzero", t.mu != 0));
    rep.add(plain_line("grouplike", is_grouplike(t.phi)));
    rep.add(line_from_residual("duality", duality_residual(cx, t)));
    rep.add(line_from_residual("hexagon", hexagon_residual(cx, t)));
    rep.add(line_from_residual("pentagon", pentagon_residual(cx, t)));
    return rep;
}

ValidationReport validate_cycassoc(const TorsorContext& cx, const CycAssocTuple& t,
                                   int gamma_variant) {
    ValidationReport rep;
    AssocTuple base = t.base;
    rep.add(plain_line("base.mu-nonzero", base.mu != 0));
    rep.add(plain_line("base.grouplike", is_grouplike(base.phi)));
    rep.add(line_from_residual("base.duality", duality_residual(cx, base)));
    rep.add(line_from_residual("base.hexagon", hexagon_residual(cx, base)));
    rep.add(line_from_residual("base.pentagon", pentagon_residual(cx, base)));
    rep.add(plain_line("psi.grouplike", is_grouplike(t.psi)));
    rep.add(line_from_residual("pseudotwist", pseudotwist_residual(cx, t)));
    rep.add(line_from_residual("octogon", octogon_residual(cx, t, gamma_variant)));
    return rep;
}

ValidationReport validate_grt(const TorsorContext& cx, const GRTElement& b) {
    ValidationReport rep;
    rep.add(plain_line("lambda-nonzero", b.lambda != 0));
    rep.add(plain_line("grouplike", is_grouplike(b.g)));
    // g(y,x) g(x,y) = 1
    UeaElement gyx =
        group_substitute(b.g, cx.f2, {exp_gen(cx.f2, 1, cx.D), exp_gen(cx.f2, 0, cx.D)});
    rep.add(line_from_residual("duality", multiply(gyx, b.g) - uea_one(cx.f2, cx.D)));
    auto gen3 = [&](int i, int j) { return cx.t3->gen(GenSymbol::tij(i, j, 0, 1)); };
    auto g_at = [&](const LieElement& u, const LieElement& v) {
        return group_substitute(b.g, cx.t3, {uea_exp(u, cx.D), uea_exp(v, cx.D)});
    };
    // g^{1,2,3} g^{2,3,1} g^{3,1,2} = 1
    UeaElement prod = g_at(gen3(1, 2), gen3(2, 3));
    prod = multiply(prod, g_at(gen3(2, 3), gen3(1, 3)));
    prod = multiply(prod, g_at(gen3(1, 3), gen3(1, 2)));
    rep.add(line_from_residual("hexagon-product", prod - uea_one(cx.t3, cx.D)));
    // t12 + Ad(g^{1,2,3})(t23) + Ad(g^{2,1,3})(t13) = t12 + t13 + t23
    UeaElement lhs = uea_from_lie(gen3(1, 2), cx.D);
    lhs += Ad(g_at(gen3(1, 2), gen3(2, 3)), uea_from_lie(gen3(2, 3), cx.D));
    lhs += Ad(g_at(gen3(1, 2), gen3(1, 3)), uea_from_lie(gen3(1, 3), cx.D));
    UeaElement rhs = uea_from_lie(gen3(1, 2) + gen3(1, 3) + gen3(2, 3), cx.D);
    rep.add(line_from_residual("ad-sum", lhs - rhs));
    // pentagon
    auto gen4 = [&](int i, int j) { return cx.t4->gen(GenSymbol::tij(i, j, 0, 1)); };
    auto g4 = [&](const LieElement& u, const LieElement& v) {
        return group_substitute(b.g, cx.t4, {uea_exp(u, cx.D), uea_exp(v, cx.D)});
    };
    UeaElement pl = g4(gen4(1, 2), gen4(2, 3));
    pl = multiply(pl, g4(gen4(1, 2) + gen4(1, 3), gen4(2, 4) + gen4(3, 4)));
    pl = multiply(pl, g4(gen4(2, 3), gen4(3, 4)));
    UeaElement pr = g4(gen4(1, 3) + gen4(2, 3), gen4(3, 4));
    pr = multiply(pr, g4(gen4(1, 2), gen4(2, 3) + gen4(2, 4)));
    rep.add(line_from_residual("pentagon", pl - pr));
    return rep;
}

ValidationReport validate_grtgamma(const TorsorContext& cx, const GRTGammaElement& b) {
    ValidationReport rep;
    ValidationReport base = validate_grt(cx, GRTElement{Rat(1), b.g});
    for (auto& l : base.lines) {
        l.id = "g." + l.id;
        rep.add(l);
    }
    rep.add(plain_line("h.grouplike", is_grouplike(b.h)));
    int N = cx.N;
    auto y = [&](int a) { return exp_gen(cx.fN1, 1 + ((a % N + N) % N), cx.D); };
    auto h_at = [&](const UeaElement& X, const std::vector<UeaElement>& ys) {
        std::vector<UeaElement> args{X};
        for (auto& v : ys) args.push_back(v);
        return group_substitute(b.h, cx.fN1, args);
    };
    UeaElement eX = exp_gen(cx.fN1, 0, cx.D);
    UeaElement e02 = uea_exp(t02bar_lie(cx), cx.D);
    // (1): h^{0,1,2} (h^{0,2,1})^{-1} h(t02 | t^1, t^0, ..., t^{2-N}) h(t01|t^1..t^N)^{-1} = 1
    std::vector<UeaElement> ys1, ys2;
    for (int a = 0; a < N; ++a) ys1.push_back(y(1 - a));
    for (int a = 0; a < N; ++a) ys2.push_back(y(1 + a));
    UeaElement one = uea_one(cx.fN1, cx.D);
    UeaElement r1 = b.h;
    r1 = multiply(r1, uea_inverse(swap_subst(cx, b.h)));
    r1 = multiply(r1, h_at(e02, ys1));
    r1 = multiply(r1, uea_inverse(h_at(eX, ys2)));
    rep.add(line_from_residual("cyc-duality", r1 - one));
    // (2): t01 + sum_a Ad(h^{(a)})(y(a)) + Ad(h^{012} (h^{021})^{-1})(t02) = 0
    UeaElement s = uea_from_lie(cx.fN1->gen(0), cx.D);
    for (int a = 0; a < N; ++a)
        s += Ad(shift_subst(cx, b.h, a), uea_from_lie(cx.fN1->gen(1 + a), cx.D));
    s += Ad(multiply(b.h, uea_inverse(swap_subst(cx, b.h))), uea_from_lie(t02bar_lie(cx), cx.D));
    rep.add(line_from_residual("cyc-ad-sum", s));
    // (3): h^{01,2,3} h^{0,1,23} = h^{0,1,2} h^{0,12,3} g^{1,2,3} in U(t3g)
    CycAssocTuple fake{AssocTuple{Rat(1), b.g}, b.h, N};
    rep.add(line_from_residual("cyc-pentagon", pseudotwist_residual(cx, fake)));
    return rep;
}

ValidationReport validate_gt(const TorsorContext& cx, const GTElement& a, const AssocTuple* ref) {
    ValidationReport rep;
    rep.add(plain_line("lambda-nonzero", a.lambda != 0));
    rep.add(plain_line("grouplike", is_grouplike(a.f)));
    UeaElement fyx =
        group_substitute(a.f, cx.f2, {exp_gen(cx.f2, 1, cx.D), exp_gen(cx.f2, 0, cx.D)});
    rep.add(line_from_residual("duality", multiply(a.f, fyx) - uea_one(cx.f2, cx.D)));
    // x1^nu f(x1,x2) x2^nu f(x2,x3) x3^nu f(x3,x1) = 1 with x1 x2 x3 = 1
    Rat nu = (a.lambda - 1) / 2;
    UeaElement x1 = exp_gen(cx.f2, 0, cx.D);
    UeaElement x2 = exp_gen(cx.f2, 1, cx.D);
    UeaElement x3 = uea_inverse(multiply(x2, x1));  // x2 x1 x3 = 1 in this composition order
    auto f_at = [&](const UeaElement& u, const UeaElement& v) {
        return group_substitute(a.f, cx.f2, {u, v});
    };
    UeaElement lhs = grouplike_pow(x1, nu);
    lhs = multiply(lhs, f_at(x1, x2));
    lhs = multiply(lhs, grouplike_pow(x2, nu));
    lhs = multiply(lhs, f_at(x2, x3));
    lhs = multiply(lhs, grouplike_pow(x3, nu));
    lhs = multiply(lhs, f_at(x3, x1));
    rep.add(line_from_residual("hexagon", lhs - uea_one(cx.f2, cx.D)));
    if (ref) {
        AssocTuple moved = act_gt_on_assoc(cx, a, *ref);
        ValidationReport sub = validate_assoc(cx, moved);
        rep.add(plain_line("pentagon(indirect)", sub.pass,
                           sub.pass ? "action output validates" : "action output fails validation"));
    } else {
        rep.add(plain_line("pentagon(indirect)", false,
                           "missing reference associator; run `solve associator` first"));
    }
    return rep;
}

ValidationReport validate_gtm(const TorsorContext& cx, const GTMElement& a,
                              const CycAssocTuple* ref) {
    ValidationReport rep;
    ValidationReport base = validate_gt(cx, a.base, nullptr);
    base.lines.pop_back();  // drop the missing-ref pentagon line; handled below
    for (auto& l : base.lines) {
        l.id = "f." + l.id;
        rep.add(l);
    }
    rep.add(plain_line("g.grouplike", is_grouplike(a.g)));
    // bookkeeping: lambda = 1 + mu_1 N determines the exponent in (tO)
    Rat mu1 = (a.base.lambda - 1) / cx.N;
    {
        std::ostringstream os;
        os << "mu_1 = " << rat_str(mu1);
        rep.add(plain_line("lambda-bookkeeping", true, os.str()));
    }
    // (tO), directly in U(f_2): x^l g(x,y) y^{(l+1)/2} g(z,y)^{-1} z^l
    //   g(z,y) y^{(l-1)/2} g(x,y)^{-1} = 1  with x y z = 1 and the kernel
    // generators realized as y(a) = x^a y x^{-a}; in this normalization the
    // deck factor alpha is carried by the x-exponents and no extra
    // conjugation appears (for N = 1 the displayed equation has none either)
    {
        const Rat& l = a.base.lambda;
        UeaElement x = exp_gen(cx.f2, 0, cx.D);
        UeaElement yy = exp_gen(cx.f2, 1, cx.D);
        UeaElement z = uea_inverse(multiply(x, yy));
        std::vector<UeaElement> emb{uea_pow(x, cx.N)};
        for (int s = 0; s < cx.N; ++s)
            emb.push_back(multiply(multiply(uea_pow(x, s), yy), uea_pow(x, -s)));
        UeaElement gxy = group_substitute(a.g, cx.f2, emb);
        UeaElement gzy = group_substitute(gxy, cx.f2, {z, yy});
        UeaElement lhs = grouplike_pow(x, l);
        lhs = multiply(lhs, gxy);
        lhs = multiply(lhs, grouplike_pow(yy, (l + 1) / 2));
        lhs = multiply(lhs, uea_inverse(gzy));
        lhs = multiply(lhs, grouplike_pow(z, l));
        lhs = multiply(lhs, gzy);
        lhs = multiply(lhs, grouplike_pow(yy, (l - 1) / 2));
        lhs = multiply(lhs, uea_inverse(gxy));
        rep.add(line_from_residual("tO", lhs - uea_one(cx.f2, cx.D)));
    }
    if (ref) {
        CycAssocTuple moved = act_gtm_on_cycassoc(cx, a, *ref);
        ValidationReport sub = validate_cycassoc(cx, moved);
        rep.add(plain_line("MP(indirect)", sub.pass,
                           sub.pass ? "action output validates" : "action output fails validation"));
    } else {
        rep.add(plain_line("MP(indirect)", false,
                           "missing reference cyclotomic associator; run `solve cyclotomic` first"));
    }
    return rep;
}

UeaElement random_grouplike(const HandlePtr& h, int D, std::mt19937& rng, int max_abs,
                            int min_degree) {
    LieElement l = h->zero();
    for (int d = min_degree; d <= D; ++d) {
        SparseRow row;
        for (int p = 0; p < h->dim(d); ++p) {
            long num = (long)(rng() % (2 * max_abs + 1)) - max_abs;
            if (num != 0) row.emplace_back(p, Rat(num));
        }
        if (!row.empty()) l.coords[d] = row;
    }
    l.alg = h;
    return uea_exp(l, D);
}

}  // namespace moperad
