// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Every threshold is pinned here; all arithmetic is exact (zero tolerance).

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "moperad/chord.hpp"
#include "moperad/par_groupoids.hpp"
#include "moperad/solver.hpp"

using namespace moperad;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, const std::function<bool(std::string&)>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << label << " ("
              << ms << " ms)";
    if (!detail.empty()) std::cout << "  -- " << detail;
    std::cout << "\n";
    if (!ok) ++g_failures;
}

long witt(long m, long d) {
    auto mobius = [](long n) {
        long res = 1;
        for (long p = 2; p * p <= n; ++p)
            if (n % p == 0) {
                n /= p;
                if (n % p == 0) return 0L;
                res = -res;
            }
        if (n > 1) res = -res;
        return res;
    };
    long s = 0;
    for (long e = 1; e <= d; ++e)
        if (d % e == 0) {
            long pw = 1;
            for (long k = 0; k < d / e; ++k) pw *= m;
            s += mobius(e) * pw;
        }
    return s / d;
}

bool jacobi_antisym_exhaustive(const HandlePtr& h, int D, std::string& detail) {
    // all basis pairs/triples with total degree within the cap
    std::vector<std::pair<int, int>> basis;  // (degree, position)
    for (int d = 1; d <= D; ++d)
        for (int p = 0; p < h->dim(d); ++p) basis.emplace_back(d, p);
    auto elem = [&](const std::pair<int, int>& b) {
        LieElement e{h, {}};
        e.coords[b.first] = {{b.second, Rat(1)}};
        return e;
    };
    for (const auto& a : basis)
        for (const auto& b : basis) {
            if (a.first + b.first > D) continue;
            LieElement ea = elem(a), eb = elem(b);
            if (!(bracket(ea, eb) + bracket(eb, ea)).is_zero()) {
                detail = "antisymmetry fails";
                return false;
            }
            for (const auto& c : basis) {
                if (a.first + b.first + c.first > D) continue;
                LieElement ec = elem(c);
                LieElement j = bracket(bracket(ea, eb), ec);
                j += bracket(bracket(eb, ec), ea);
                j += bracket(bracket(ec, ea), eb);
                if (!j.is_zero()) {
                    detail = "jacobi fails";
                    return false;
                }
            }
        }
    return true;
}

bool moperad_axioms_for(int N, int D, std::string& detail) {
    // inner-insertion square: (p o_j q) in o_0 vs o_0 then insert, on generators
    {
        auto outer = t_gamma_handle({5}, N, D);
        auto inner = t_gamma_handle({1, 2}, N, D);
        auto inner_ins = t_gamma_handle({1, 3, 4}, N, D);
        auto mid = t_gamma_handle({1, 2, 5}, N, D);
        auto tgt = t_gamma_handle({1, 3, 4, 5}, N, D);
        auto m_ins_first = mop_i_outer(inner, 2, {3, 4}, inner_ins);
        auto m_then_0 = mop_0_inner(inner_ins, tgt);
        auto m_0_first = mop_0_inner(inner, mid);
        auto m_then_ins = mop_i_outer(mid, 2, {3, 4}, tgt);
        m_ins_first.validate();
        m_then_0.validate();
        m_0_first.validate();
        m_then_ins.validate();
        for (int k = 0; k < inner->num_gens(); ++k) {
            LieElement g = inner->gen(k);
            if (!(m_then_0.apply(m_ins_first.apply(g)) == m_then_ins.apply(m_0_first.apply(g)))) {
                detail = "inner-insertion square fails";
                return false;
            }
        }
        // outer-insertion square
        auto m_a1 = mop_0_outer(outer, {1, 2}, mid);
        auto m_a2 = mop_i_outer(mid, 5, {6, 7}, t_gamma_handle({1, 2, 6, 7}, N, D));
        auto m_b1 = mop_i_outer(outer, 5, {6, 7}, t_gamma_handle({6, 7}, N, D));
        auto m_b2 = mop_0_outer(t_gamma_handle({6, 7}, N, D), {1, 2},
                                t_gamma_handle({1, 2, 6, 7}, N, D));
        for (int k = 0; k < outer->num_gens(); ++k) {
            LieElement g = outer->gen(k);
            if (!(m_a2.apply(m_a1.apply(g)) == m_b2.apply(m_b1.apply(g)))) {
                detail = "outer-insertion square fails";
                return false;
            }
        }
        // monoid associativity of o_0 on generators (arities 2,1,1)
        auto h21 = t_gamma_handle({8, 9}, N, D);
        auto h1a = t_gamma_handle({6}, N, D);
        auto h1b = t_gamma_handle({7}, N, D);
        auto h_ab = t_gamma_handle({6, 7}, N, D);
        auto h_all = t_gamma_handle({6, 7, 8, 9}, N, D);
        auto h_b_then = t_gamma_handle({7, 8, 9}, N, D);
        for (int k = 0; k < h21->num_gens(); ++k) {
            LieElement g = h21->gen(k);
            LieElement left = mop_0_outer(t_gamma_handle({8, 9}, N, D), {6, 7}, h_all)
                                  .apply(g);  // (o o_0 (p o_0 q)) outer part: insert {6,7}
            LieElement right = mop_0_outer(h_b_then, {6}, h_all)
                                   .apply(mop_0_outer(h21, {7}, h_b_then).apply(g));
            if (!(left == right)) {
                detail = "o_0 associativity fails";
                return false;
            }
        }
        (void)h1a;
        (void)h1b;
        (void)h_ab;
    }
    // S-equivariance: renaming commutes with insertion
    {
        auto h2 = t_gamma_handle({1, 2}, N, D);
        auto tgt_a = t_gamma_handle({2, 3, 4}, N, D);
        auto renamed = t_gamma_handle({1, 2}, N, D);  // names {1,2} with swap 1<->2
        auto tgt_b = t_gamma_handle({1, 3, 4}, N, D);
        auto ren12 = rename_map(h2, {{1, 2}, {2, 1}}, renamed);
        auto ren_after = rename_map(tgt_a, {{2, 1}}, tgt_b);
        auto ins_1 = mop_i_outer(h2, 1, {3, 4}, tgt_a);
        auto ins_2 = mop_i_outer(renamed, 2, {3, 4}, tgt_b);
        for (int k = 0; k < h2->num_gens(); ++k) {
            LieElement g = h2->gen(k);
            if (!(ren_after.apply(ins_1.apply(g)) == ins_2.apply(ren12.apply(g)))) {
                detail = "S-equivariance fails";
                return false;
            }
        }
    }
    // Gamma-equivariance: o_i along the diagonal-copy morphism, o_0 along concatenation
    {
        auto h2 = t_gamma_handle({1, 2}, N, D);
        auto tgt = t_gamma_handle({2, 3, 4}, N, D);
        auto ins = mop_i_outer(h2, 1, {3, 4}, tgt);
        GammaVector gv{N, {{1, 1 % N}, {2, (N > 1 ? 2 : 0) % N}}};
        GammaVector gv_copied{N, {{3, gv.at(1)}, {4, gv.at(1)}, {2, gv.at(2)}}};
        for (int k = 0; k < h2->num_gens(); ++k) {
            LieElement g = h2->gen(k);
            if (!(ins.apply(gamma_act(gv, g)) == gamma_act(gv_copied, ins.apply(g)))) {
                detail = "Gamma-equivariance of o_i fails";
                return false;
            }
        }
        auto houter = t_gamma_handle({3}, N, D);
        auto tgt0 = t_gamma_handle({1, 2, 3}, N, D);
        auto ins0o = mop_0_outer(houter, {1, 2}, tgt0);
        auto ins0i = mop_0_inner(h2, tgt0);
        GammaVector gv_o{N, {{3, 1 % N}}};
        GammaVector gv_cat{N, {{3, 1 % N}, {1, gv.at(1)}, {2, gv.at(2)}}};
        for (int k = 0; k < houter->num_gens(); ++k) {
            LieElement g = houter->gen(k);
            if (!(ins0o.apply(gamma_act(gv_o, g)) ==
                  gamma_act(gv_cat, ins0o.apply(g)))) {
                detail = "Gamma-equivariance of o_0 (outer) fails";
                return false;
            }
        }
        for (int k = 0; k < h2->num_gens(); ++k) {
            LieElement g = h2->gen(k);
            if (!(ins0i.apply(gamma_act(gv, g)) == gamma_act(gv_cat, ins0i.apply(g)))) {
                detail = "Gamma-equivariance of o_0 (inner) fails";
                return false;
            }
        }
    }
    return true;
}

}  // namespace

int main() {
    std::cout << "moperad-kit acceptance suite (exact arithmetic, zero tolerance)\n";

    criterion(1, "presentation suites: classical, annular, and labelled (N=1,2,3)", [](std::string& d) {
        for (const auto& tag : relation_tags("pab"))
            if (!check_relation(tag).pass) {
                d = "pab." + tag;
                return false;
            }
        for (const auto& tag : relation_tags("pab1"))
            if (!check_relation(tag).pass) {
                d = "pab1." + tag;
                return false;
            }
        for (int N : {1, 2, 3})
            for (const auto& tag : relation_tags("pabgamma"))
                if (!check_relation(tag, N).pass) {
                    d = "pabgamma." + tag + " N=" + std::to_string(N);
                    return false;
                }
        return true;
    });

    criterion(2, "Lie structure: t_2^G dims (D<=5), central c, Jacobi/antisym (n<=3, D<=4)",
              [](std::string& d) {
                  for (int N : {1, 2, 3}) {
                      auto h2 = t_gamma_handle({1, 2}, N, 5);
                      auto dims = h2->dims();
                      for (int deg = 1; deg <= 5; ++deg)
                          if (dims[deg - 1] != (deg == 1 ? 1 : 0) + witt(N + 1, deg)) {
                              d = "dim mismatch N=" + std::to_string(N);
                              return false;
                          }
                      LieElement c = central_element(h2);
                      for (int k = 0; k < h2->num_gens(); ++k)
                          if (!bracket(c, h2->gen(k)).is_zero()) {
                              d = "c not central";
                              return false;
                          }
                      for (int n : {2, 3}) {
                          std::vector<int> names;
                          for (int k = 1; k <= n; ++k) names.push_back(k);
                          auto h = t_gamma_handle(names, N, 4);
                          if (!jacobi_antisym_exhaustive(h, 4, d)) {
                              d += " (n=" + std::to_string(n) + ", N=" + std::to_string(N) + ")";
                              return false;
                          }
                      }
                  }
                  return true;
              });

    criterion(3, "moperad axioms on t^G: compatibility squares, S- and Gamma-equivariance",
              [](std::string& d) {
                  for (int N : {1, 2, 3})
                      if (!moperad_axioms_for(N, 3, d)) {
                          d += " (N=" + std::to_string(N) + ")";
                          return false;
                      }
                  return true;
              });

    criterion(4, "CD^G relations (30)-(36) at D=3 for N=1,2,3", [](std::string& d) {
        for (int N : {1, 2, 3})
            for (int tag = 30; tag <= 36; ++tag) {
                auto r = check_cd_relation(tag, N, 3);
                if (!r.pass) {
                    d = "tag " + std::to_string(tag) + " N=" + std::to_string(N) + " " + r.detail;
                    return false;
                }
            }
        return true;
    });

    criterion(5, "solver: associator (mu=1, D=4, |c2|=1/24) and cyclotomic (N=2, D=3)",
              [](std::string& d) {
                  auto res = solve_associator(Rat(1), 4);
                  if (res.report.obstructed) {
                      d = "associator obstructed: " + res.report.obstruction_detail;
                      return false;
                  }
                  LieElement lp = uea_log(res.tuple.phi);
                  if (!lp.coords.count(2) || lp.coords[2].size() != 1) {
                      d = "unexpected degree-2 shape";
                      return false;
                  }
                  Rat c2 = lp.coords[2][0].second;
                  if (!(c2 == Rat(1, 24) || c2 == Rat(-1, 24))) {
                      d = "|c2| != 1/24: " + rat_str(c2);
                      return false;
                  }
                  TorsorContext cx = TorsorContext::make(1, 4);
                  if (!validate_assoc(cx, res.tuple).pass) {
                      d = "validate_assoc fails";
                      return false;
                  }
                  auto cyc = solve_cyclotomic(res.tuple, 2, 3);
                  if (cyc.report.obstructed) {
                      // a complete obstruction report is a legitimate outcome for the
                      // cyclotomic solver, but with rational data it does not occur here
                      d = "cyclotomic obstruction: " + cyc.report.obstruction_detail;
                      return false;
                  }
                  TorsorContext cx2 = TorsorContext::make(2, 3);
                  if (!validate_cycassoc(cx2, cyc.tuple).pass) {
                      d = "validate_cycassoc fails";
                      return false;
                  }
                  return true;
              });

    criterion(6, "torsor suite: identities, compatibility (>=20 seeded samples), commuting "
                 "actions, trivial stabilizers",
              [](std::string& d) {
                  std::mt19937 rng(20240809);
                  int D = 3;
                  // classical side
                  {
                      TorsorContext cx = TorsorContext::make(1, D);
                      auto t = solve_associator(Rat(1), D).tuple;
                      if (!(act_gt_on_assoc(cx, gt_identity(cx), t).phi == t.phi) ||
                          !(act_assoc_grt(cx, t, grt_identity(cx)).phi == t.phi)) {
                          d = "identity action fails (classical)";
                          return false;
                      }
                      for (int s = 0; s < 20; ++s) {
                          GTElement a{Rat((long)(rng() % 5) + 1), random_grouplike(cx.f2, D, rng)};
                          GTElement b{Rat((long)(rng() % 5) + 1), random_grouplike(cx.f2, D, rng)};
                          GRTElement u{Rat((long)(rng() % 5) + 1), random_grouplike(cx.f2, D, rng)};
                          GRTElement v{Rat((long)(rng() % 5) + 1), random_grouplike(cx.f2, D, rng)};
                          auto l1 = act_gt_on_assoc(cx, gt_compose(cx, a, b), t);
                          auto l2 = act_gt_on_assoc(cx, a, act_gt_on_assoc(cx, b, t));
                          auto r1 = act_assoc_grt(cx, t, grt_compose(cx, u, v));
                          auto r2 = act_assoc_grt(cx, act_assoc_grt(cx, t, u), v);
                          auto c1 = act_assoc_grt(cx, act_gt_on_assoc(cx, a, t), u);
                          auto c2 = act_gt_on_assoc(cx, a, act_assoc_grt(cx, t, u));
                          if (!(l1.phi == l2.phi) || !(r1.phi == r2.phi) || !(c1.phi == c2.phi)) {
                              d = "classical torsor sample " + std::to_string(s);
                              return false;
                          }
                      }
                      if (gt_stabilizer_nullity(cx, t) != 0) {
                          d = "GT stabilizer nontrivial";
                          return false;
                      }
                  }
                  // cyclotomic side (N=2)
                  {
                      int N = 2;
                      TorsorContext cx = TorsorContext::make(N, D);
                      auto t = solve_cyclotomic(solve_associator(Rat(1), D).tuple, N, D).tuple;
                      if (!(act_gtm_on_cycassoc(cx, gtm_identity(cx), t).psi == t.psi) ||
                          !(act_cycassoc_grtgamma(cx, t, grtgamma_identity(cx)).psi == t.psi)) {
                          d = "identity action fails (cyclotomic)";
                          return false;
                      }
                      for (int s = 0; s < 20; ++s) {
                          GTMElement a{GTElement{Rat((long)(rng() % 5) + 1),
                                                 random_grouplike(cx.f2, D, rng)},
                                       random_grouplike(cx.fN1, D, rng), N};
                          GTMElement b{GTElement{Rat((long)(rng() % 5) + 1),
                                                 random_grouplike(cx.f2, D, rng)},
                                       random_grouplike(cx.fN1, D, rng), N};
                          GRTGammaElement u{Rat((long)(rng() % 5) + 1),
                                            random_grouplike(cx.f2, D, rng),
                                            random_grouplike(cx.fN1, D, rng), N};
                          GRTGammaElement v{Rat((long)(rng() % 5) + 1),
                                            random_grouplike(cx.f2, D, rng),
                                            random_grouplike(cx.fN1, D, rng), N};
                          auto l1 = act_gtm_on_cycassoc(cx, gtm_compose(cx, a, b), t);
                          auto l2 = act_gtm_on_cycassoc(cx, a, act_gtm_on_cycassoc(cx, b, t));
                          auto r1 = act_cycassoc_grtgamma(cx, t, grtgamma_compose(cx, u, v));
                          auto r2 = act_cycassoc_grtgamma(cx, act_cycassoc_grtgamma(cx, t, u), v);
                          auto c1 = act_cycassoc_grtgamma(cx, act_gtm_on_cycassoc(cx, a, t), u);
                          auto c2 = act_gtm_on_cycassoc(cx, a, act_cycassoc_grtgamma(cx, t, u));
                          if (!(l1.psi == l2.psi) || !(l1.base.phi == l2.base.phi) ||
                              !(r1.psi == r2.psi) || !(c1.psi == c2.psi) ||
                              !(c1.base.phi == c2.base.phi)) {
                              d = "cyclotomic torsor sample " + std::to_string(s);
                              return false;
                          }
                      }
                      if (gtm_stabilizer_nullity(cx, t) != 0) {
                          d = "GTM stabilizer nontrivial";
                          return false;
                      }
                  }
                  return true;
              });

    criterion(7, "gamma_weight == linking_with_zero mod N on sampled endomorphism words",
              [](std::string& d) {
                  std::mt19937 rng(4711);
                  for (int N : {1, 2, 3}) {
                      for (int trial = 0; trial < 25; ++trial) {
                          ParObject start = parse_object(trial % 2 ? "(01)2" : "((01)2)3", 0);
                          MorWord w = identity_word(start);
                          for (int steps = 0; steps < 5; ++steps) {
                              std::vector<MorWord> options;
                              auto tryg = [&](Head h, std::vector<std::vector<int>> bl, int e) {
                                  try {
                                      options.push_back(generator(h, w.target, bl, e));
                                  } catch (...) {
                                  }
                              };
                              auto lv = w.target.leaves();
                              for (size_t a = 0; a + 1 < lv.size(); ++a) {
                                  tryg(Head::R, {{lv[a]}, {lv[a + 1]}}, 1);
                                  tryg(Head::Rt, {{lv[a]}, {lv[a + 1]}}, 1);
                                  tryg(Head::E, {{0}, {lv[a + 1]}}, 1);
                                  tryg(Head::E, {{0}, {lv[a + 1]}}, -1);
                                  if (a + 2 < lv.size()) {
                                      tryg(Head::Psi, {{lv[a]}, {lv[a + 1]}, {lv[a + 2]}}, 1);
                                      tryg(Head::E, {{lv[a], lv[a + 1]}, {lv[a + 2]}}, 1);
                                  }
                              }
                              if (options.empty()) break;
                              w = compose(w, options[rng() % options.size()]);
                          }
                          MorWord endo = compose(w, invert(w));  // length <= 10 generator word
                          auto gw = gamma_weight(endo, N);
                          auto lk = linking_with_zero(evaluate_to_braid(endo));
                          auto order = endo.source.leaves();
                          for (size_t p = 1; p < order.size(); ++p) {
                              long expect = ((lk[p - 1] % N) + N) % N;
                              if (gw.comp.at(order[p]) != expect) {
                                  d = "mismatch at N=" + std::to_string(N);
                                  return false;
                              }
                          }
                      }
                  }
                  return true;
              });

    std::cout << "note: the analytic (cyclotomic) KZ associators and the isomorphism statements "
                 "beyond truncation-level cross-validation are out of scope by design.\n";
    if (g_failures) {
        std::cout << g_failures << " criterion(s) FAILED\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
