// moperad: batch front-end for the presentation/relation suites, Lie-algebra
// dimension tables, the torsor operations, and the associator solvers.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "moperad/json_io.hpp"

using namespace moperad;

namespace {

struct Check {
    std::string id;
    std::string status;  // pass | fail | error
    std::string details;
    long ms = 0;
};

struct Report {
    std::string command;
    unsigned seed = 0;
    std::vector<Check> checks;
    Json extra = Json::object();

    int exit_code() const {
        for (const auto& c : checks)
            if (c.status != "pass") return 1;
        return 0;
    }
    Json to_json() const {
        Json cj = Json::array();
        int pass = 0, fail = 0, error = 0;
        for (const auto& c : checks) {
            Json e{{"id", c.id}, {"status", c.status}, {"ms", c.ms}};
            if (!c.details.empty()) e["details"] = c.details;
            cj.push_back(e);
            (c.status == "pass" ? pass : c.status == "fail" ? fail : error)++;
        }
        Json j{{"schema", "moperad-kit/1"},
               {"command", command},
               {"seed", seed},
               {"checks", cj},
               {"summary", {{"pass", pass}, {"fail", fail}, {"error", error}}}};
        for (const auto& [k, v] : extra.items()) j[k] = v;
        return j;
    }
    void print_text() const {
        for (const auto& c : checks) {
            std::cout << "[" << (c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "ERR ")
                      << "] " << c.id;
            if (!c.details.empty()) std::cout << "  (" << c.details << ")";
            std::cout << "  " << c.ms << " ms\n";
        }
    }
};

template <typename F>
void run_check(Report& rep, const std::string& id, F&& body) {
    Check c;
    c.id = id;
    auto t0 = std::chrono::steady_clock::now();
    try {
        std::string details;
        bool ok = body(details);
        c.status = ok ? "pass" : "fail";
        c.details = details;
    } catch (const std::exception& e) {
        c.status = "error";
        c.details = e.what();
    }
    c.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
               .count();
    rep.checks.push_back(std::move(c));
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
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

ValidationReport validate_file(const TorsorFile& f, const TorsorFile* ref, int gamma_variant) {
    TorsorContext cx = TorsorContext::make(f.N, f.trunc);
    if (f.kind == "assoc") return validate_assoc(cx, *f.assoc);
    if (f.kind == "cycassoc") return validate_cycassoc(cx, *f.cycassoc, gamma_variant);
    if (f.kind == "grt") return validate_grt(cx, *f.grt);
    if (f.kind == "grtgamma") return validate_grtgamma(cx, *f.grtgamma);
    if (f.kind == "gt") {
        const AssocTuple* r = ref && ref->assoc ? &*ref->assoc : nullptr;
        return validate_gt(cx, *f.gt, r);
    }
    if (f.kind == "gtm") {
        const CycAssocTuple* r = ref && ref->cycassoc ? &*ref->cycassoc : nullptr;
        return validate_gtm(cx, *f.gtm, r);
    }
    throw std::invalid_argument("validate: unknown kind " + f.kind);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"moperad-kit: exact checks for parenthesized (cyclotomic) braids, chord "
                 "diagrams, associators and their torsors"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    unsigned seed = 0;
    app.add_flag("--json", as_json, "emit the machine-readable report");
    app.add_option("--seed", seed, "seed for randomized property checks");

    // verify presentation | cdgamma
    auto* verify = app.add_subcommand("verify", "relation suites");
    verify->require_subcommand(1);
    verify->fallthrough();
    auto* vpres = verify->add_subcommand("presentation", "check a presentation's relations");
    vpres->fallthrough();
    std::string which = "pab";
    int N = 1;
    vpres->add_option("--which", which, "pab|pab1|pabgamma")->required();
    vpres->add_option("--N", N, "cyclotomic modulus (pabgamma)");
    auto* vcd = verify->add_subcommand("cdgamma", "check the N-chord-diagram relations (30)-(36)");
    vcd->fallthrough();
    int cdN = 1, cdD = 3;
    vcd->add_option("--N", cdN, "modulus")->required();
    vcd->add_option("--degree", cdD, "truncation degree");

    // lie basis
    auto* lie = app.add_subcommand("lie", "Lie algebra utilities");
    lie->fallthrough();
    auto* lbasis = lie->add_subcommand("basis", "per-degree dimension table");
    lbasis->fallthrough();
    std::string algebra = "tgamma";
    int ln = 2, lN = 1, lgens = 2, lD = 3;
    lbasis->add_option("--algebra", algebra, "tgamma|t|free")->required();
    lbasis->add_option("--n", ln, "number of non-frozen strands");
    lbasis->add_option("--N", lN, "modulus (tgamma)");
    lbasis->add_option("--gens", lgens, "generator count (free)");
    lbasis->add_option("--degree", lD, "maximum degree")->required();

    // solve
    auto* solve = app.add_subcommand("solve", "degree-by-degree solvers");
    solve->require_subcommand(1);
    solve->fallthrough();
    auto* sassoc = solve->add_subcommand("associator", "solve the associator equations");
    sassoc->fallthrough();
    std::string mu_str = "1";
    int saD = 4;
    std::string out_path;
    sassoc->add_option("--mu", mu_str, "nonzero rational mu");
    sassoc->add_option("--degree", saD, "target degree");
    sassoc->add_option("--out", out_path, "output element file");
    auto* scyc = solve->add_subcommand("cyclotomic", "solve the cyclotomic pair");
    scyc->fallthrough();
    int scN = 2, scD = 3;
    std::string base_path, cyc_out;
    scyc->add_option("--N", scN, "modulus")->required();
    scyc->add_option("--degree", scD, "target degree");
    scyc->add_option("--base", base_path, "associator element file")->required();
    scyc->add_option("--out", cyc_out, "output element file");

    // torsor
    auto* torsor = app.add_subcommand("torsor", "torsor-layer operations");
    torsor->require_subcommand(1);
    torsor->fallthrough();
    auto* tcomp = torsor->add_subcommand("compose", "compose two group elements");
    tcomp->fallthrough();
    std::vector<std::string> comp_in;
    std::string comp_out;
    tcomp->add_option("--in", comp_in, "two element files (left, right)")->expected(2);
    tcomp->add_option("--out", comp_out, "output element file");
    auto* tact = torsor->add_subcommand("act", "act on a (cyclotomic) associator");
    tact->fallthrough();
    std::string act_elt, act_on, act_out;
    tact->add_option("--elt", act_elt, "group element file")->required();
    tact->add_option("--on", act_on, "associator file")->required();
    tact->add_option("--out", act_out, "output file");
    auto* tval = torsor->add_subcommand("validate", "check the defining equations");
    tval->fallthrough();
    std::string val_in, val_ref;
    int gamma_variant = 1, samples = 0;
    tval->add_option("--in", val_in, "element file")->required();
    tval->add_option("--ref", val_ref, "reference associator for indirect checks");
    tval->add_option("--gamma", gamma_variant, "octogon relabeling variant (default 1)");
    tval->add_option("--samples", samples,
                     "extra seeded random torsor-compatibility samples to run");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Report rep;
    {
        std::ostringstream os;
        for (int i = 1; i < argc; ++i) os << (i > 1 ? " " : "") << argv[i];
        rep.command = os.str();
        rep.seed = seed;
    }

    try {
        if (vpres->parsed()) {
            for (const auto& tag : relation_tags(which)) {
                run_check(rep, which + "." + tag, [&](std::string& details) {
                    auto r = check_relation(tag, N);
                    details = r.detail;
                    return r.pass;
                });
            }
        } else if (vcd->parsed()) {
            for (int tag = 30; tag <= 36; ++tag) {
                run_check(rep, "cdgamma." + std::to_string(tag), [&](std::string& details) {
                    auto r = check_cd_relation(tag, cdN, cdD);
                    details = r.detail;
                    return r.pass;
                });
            }
        } else if (lbasis->parsed()) {
            HandlePtr h;
            if (algebra == "tgamma") {
                std::vector<int> names;
                for (int k = 1; k <= ln; ++k) names.push_back(k);
                h = t_gamma_handle(names, lN, lD);
            } else if (algebra == "t") {
                std::vector<int> names;
                for (int k = 1; k <= ln; ++k) names.push_back(k);
                h = t_handle(names, lD);
            } else if (algebra == "free") {
                h = free_handle(lgens, lD);
            } else {
                throw std::invalid_argument("--algebra must be tgamma|t|free");
            }
            auto dims = h->dims();
            rep.extra["dims"] = dims;
            run_check(rep, "lie.basis", [&](std::string& details) {
                std::ostringstream os;
                os << "dims";
                for (int d : dims) os << " " << d;
                details = os.str();
                if (algebra == "tgamma" && ln == 2) {
                    for (int d = 1; d <= lD; ++d)
                        if (dims[d - 1] != (d == 1 ? 1 : 0) + witt(lN + 1, d)) return false;
                }
                return true;
            });
            if (!as_json) {
                std::cout << "degree:";
                for (int d = 1; d <= lD; ++d) std::cout << " " << d;
                std::cout << "\ndim:   ";
                for (int d : dims) std::cout << " " << d;
                std::cout << "\n";
            }
        } else if (sassoc->parsed()) {
            AssocSolveResult result;
            run_check(rep, "solve.associator", [&](std::string& details) {
                result = solve_associator(parse_rat(mu_str), saD);
                if (result.report.obstructed) {
                    details = result.report.obstruction_detail;
                    return false;
                }
                details = "certified through degree " +
                          std::to_string(result.report.certified_degree);
                return true;
            });
            if (!result.report.obstructed)
            run_check(rep, "solve.associator.validate", [&](std::string& details) {
                TorsorContext cx = TorsorContext::make(1, saD);
                auto v = validate_assoc(cx, result.tuple);
                if (!v.pass)
                    for (const auto& l : v.lines)
                        if (!l.pass) details += l.id + " ";
                return v.pass;
            });
            rep.extra["report"] = solve_report_to_json(result.report);
            if (!out_path.empty()) {
                Json j = assoc_to_json(result.tuple, result.report.certified_degree);
                j["report"] = solve_report_to_json(result.report);
                write_json_file(out_path, j);
            }
        } else if (scyc->parsed()) {
            TorsorFile base = torsor_from_json(read_json_file(base_path));
            if (base.kind != "assoc") throw std::invalid_argument("--base must hold kind=assoc");
            CycSolveResult result;
            run_check(rep, "solve.cyclotomic", [&](std::string& details) {
                result = solve_cyclotomic(*base.assoc, scN, scD);
                if (result.report.obstructed) {
                    details = result.report.obstruction_detail;
                    return false;
                }
                details = "certified through degree " +
                          std::to_string(result.report.certified_degree);
                return true;
            });
            if (!result.report.obstructed) {
                run_check(rep, "solve.cyclotomic.validate", [&](std::string& details) {
                    TorsorContext cx = TorsorContext::make(scN, scD);
                    auto v = validate_cycassoc(cx, result.tuple);
                    if (!v.pass)
                        for (const auto& l : v.lines)
                            if (!l.pass) details += l.id + " ";
                    return v.pass;
                });
            }
            rep.extra["report"] = solve_report_to_json(result.report);
            if (!cyc_out.empty() && !result.report.obstructed) {
                Json j = cycassoc_to_json(result.tuple, result.report.certified_degree);
                j["report"] = solve_report_to_json(result.report);
                write_json_file(cyc_out, j);
            }
        } else if (tcomp->parsed()) {
            TorsorFile a = torsor_from_json(read_json_file(comp_in[0]));
            TorsorFile b = torsor_from_json(read_json_file(comp_in[1]));
            if (a.kind != b.kind || a.N != b.N)
                throw std::invalid_argument("compose: kind/N mismatch");
            int D = std::min(a.trunc, b.trunc);
            TorsorContext cx = TorsorContext::make(a.N, D);
            Json out;
            run_check(rep, "torsor.compose." + a.kind, [&](std::string& details) {
                if (a.kind == "gt") {
                    GTElement x{a.gt->lambda, rebase(a.gt->f, cx.f2)};
                    GTElement y{b.gt->lambda, rebase(b.gt->f, cx.f2)};
                    out = gt_to_json(gt_compose(cx, x, y));
                } else if (a.kind == "gtm") {
                    GTMElement x{{a.gtm->base.lambda, rebase(a.gtm->base.f, cx.f2)},
                                 rebase(a.gtm->g, cx.fN1), a.N};
                    GTMElement y{{b.gtm->base.lambda, rebase(b.gtm->base.f, cx.f2)},
                                 rebase(b.gtm->g, cx.fN1), b.N};
                    out = gtm_to_json(gtm_compose(cx, x, y));
                } else if (a.kind == "grt") {
                    GRTElement x{a.grt->lambda, rebase(a.grt->g, cx.f2)};
                    GRTElement y{b.grt->lambda, rebase(b.grt->g, cx.f2)};
                    out = grt_to_json(grt_compose(cx, x, y));
                } else if (a.kind == "grtgamma") {
                    GRTGammaElement x{a.grtgamma->lambda, rebase(a.grtgamma->g, cx.f2),
                                      rebase(a.grtgamma->h, cx.fN1), a.N};
                    GRTGammaElement y{b.grtgamma->lambda, rebase(b.grtgamma->g, cx.f2),
                                      rebase(b.grtgamma->h, cx.fN1), b.N};
                    out = grtgamma_to_json(grtgamma_compose(cx, x, y));
                } else {
                    throw std::invalid_argument("compose: kind must be a group element");
                }
                details = "composed at truncation " + std::to_string(D);
                return true;
            });
            if (!comp_out.empty()) write_json_file(comp_out, out);
        } else if (tact->parsed()) {
            TorsorFile e = torsor_from_json(read_json_file(act_elt));
            TorsorFile t = torsor_from_json(read_json_file(act_on));
            int D = std::min(e.trunc, t.trunc);
            TorsorContext cx = TorsorContext::make(t.N, D);
            Json out;
            run_check(rep, "torsor.act", [&](std::string& details) {
                if (e.kind == "gt" && t.kind == "assoc") {
                    GTElement x{e.gt->lambda, rebase(e.gt->f, cx.f2)};
                    AssocTuple u{t.assoc->mu, rebase(t.assoc->phi, cx.f2)};
                    out = assoc_to_json(act_gt_on_assoc(cx, x, u), D);
                } else if (e.kind == "grt" && t.kind == "assoc") {
                    GRTElement x{e.grt->lambda, rebase(e.grt->g, cx.f2)};
                    AssocTuple u{t.assoc->mu, rebase(t.assoc->phi, cx.f2)};
                    out = assoc_to_json(act_assoc_grt(cx, u, x), D);
                } else if (e.kind == "gtm" && t.kind == "cycassoc") {
                    GTMElement x{{e.gtm->base.lambda, rebase(e.gtm->base.f, cx.f2)},
                                 rebase(e.gtm->g, cx.fN1), e.N};
                    CycAssocTuple u{{t.cycassoc->base.mu, rebase(t.cycassoc->base.phi, cx.f2)},
                                    rebase(t.cycassoc->psi, cx.fN1), t.N};
                    out = cycassoc_to_json(act_gtm_on_cycassoc(cx, x, u), D);
                } else if (e.kind == "grtgamma" && t.kind == "cycassoc") {
                    GRTGammaElement x{e.grtgamma->lambda, rebase(e.grtgamma->g, cx.f2),
                                      rebase(e.grtgamma->h, cx.fN1), e.N};
                    CycAssocTuple u{{t.cycassoc->base.mu, rebase(t.cycassoc->base.phi, cx.f2)},
                                    rebase(t.cycassoc->psi, cx.fN1), t.N};
                    out = cycassoc_to_json(act_cycassoc_grtgamma(cx, u, x), D);
                } else {
                    throw std::invalid_argument("act: unsupported kind pair " + e.kind + " on " +
                                                t.kind);
                }
                details = e.kind + " on " + t.kind;
                return true;
            });
            if (!act_out.empty()) write_json_file(act_out, out);
        } else if (tval->parsed()) {
            TorsorFile f = torsor_from_json(read_json_file(val_in));
            std::optional<TorsorFile> ref;
            if (!val_ref.empty()) ref = torsor_from_json(read_json_file(val_ref));
            ValidationReport v = validate_file(f, ref ? &*ref : nullptr, gamma_variant);
            for (const auto& l : v.lines) {
                run_check(rep, f.kind + "." + l.id, [&](std::string& details) {
                    details = l.detail;
                    if (!l.pass && l.first_fail_degree >= 0)
                        details += " (first failing degree " +
                                   std::to_string(l.first_fail_degree) + ")";
                    return l.pass;
                });
            }
            if (samples > 0 && (f.kind == "assoc" || f.kind == "cycassoc")) {
                // seeded random torsor-compatibility probes around the element
                std::mt19937 rng(seed);
                TorsorContext cx = TorsorContext::make(f.N, f.trunc);
                run_check(rep, f.kind + ".torsor-samples", [&](std::string& details) {
                    for (int s = 0; s < samples; ++s) {
                        if (f.kind == "assoc") {
                            GTElement a{Rat((long)(rng() % 5) + 1), random_grouplike(cx.f2, f.trunc, rng)};
                            GTElement b{Rat((long)(rng() % 5) + 1), random_grouplike(cx.f2, f.trunc, rng)};
                            auto lhs = act_gt_on_assoc(cx, gt_compose(cx, a, b), *f.assoc);
                            auto rhs = act_gt_on_assoc(cx, a, act_gt_on_assoc(cx, b, *f.assoc));
                            if (!(lhs.phi == rhs.phi)) return false;
                        } else {
                            GTMElement a{GTElement{Rat((long)(rng() % 5) + 1),
                                                   random_grouplike(cx.f2, f.trunc, rng)},
                                         random_grouplike(cx.fN1, f.trunc, rng), f.N};
                            GTMElement b{GTElement{Rat((long)(rng() % 5) + 1),
                                                   random_grouplike(cx.f2, f.trunc, rng)},
                                         random_grouplike(cx.fN1, f.trunc, rng), f.N};
                            auto lhs = act_gtm_on_cycassoc(cx, gtm_compose(cx, a, b), *f.cycassoc);
                            auto rhs =
                                act_gtm_on_cycassoc(cx, a, act_gtm_on_cycassoc(cx, b, *f.cycassoc));
                            if (!(lhs.psi == rhs.psi) || !(lhs.base.phi == rhs.base.phi))
                                return false;
                        }
                    }
                    details = std::to_string(samples) + " samples, seed " + std::to_string(seed);
                    return true;
                });
            }
        }
    } catch (const std::exception& e) {
        Check c;
        c.id = "fatal";
        c.status = "error";
        c.details = e.what();
        rep.checks.push_back(c);
    }

    if (as_json)
        std::cout << rep.to_json().dump(2) << "\n";
    else
        rep.print_text();
    return rep.exit_code();
}
