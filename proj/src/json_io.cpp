#include "moperad/json_io.hpp"

#include <stdexcept>

namespace moperad {

Json uea_to_json(const UeaElement& u) {
    Json terms = Json::array();
    for (const auto& [m, c] : u.terms) terms.push_back(Json::array({m, rat_str(c)}));
    return Json{{"trunc", u.trunc}, {"terms", terms}};
}

UeaElement uea_from_json(const Json& j, const HandlePtr& h) {
    UeaElement u{h, j.at("trunc").get<int>(), {}};
    for (const auto& t : j.at("terms")) {
        PbwMonomial m = t.at(0).get<PbwMonomial>();
        Rat c = parse_rat(t.at(1).get<std::string>());
        if (c != 0) u.terms[m] = c;
    }
    return u;
}

Json presentation_to_json(const LiePresentation& p) {
    Json gens = Json::array();
    for (const auto& g : p.gens) gens.push_back(g.str());
    Json rels = Json::array();
    for (const auto& [d, row] : p.relations) {
        Json r = Json::array();
        for (const auto& [k, c] : row) r.push_back(Json::array({k, rat_str(c)}));
        rels.push_back(Json{{"degree", d}, {"coords", r}});
    }
    std::string family = p.family == LiePresentation::Free ? "free"
                         : p.family == LiePresentation::Classical ? "t"
                                                                  : "tgamma";
    return Json{{"family", family}, {"names", p.names}, {"N", p.gamma_modulus},
                {"generators", gens}, {"relations", rels}};
}

Json lie_to_json(const LieElement& a) {
    Json coords = Json::object();
    for (const auto& [d, row] : a.coords) {
        Json r = Json::array();
        for (const auto& [p, c] : row) r.push_back(Json::array({p, rat_str(c)}));
        coords[std::to_string(d)] = r;
    }
    return Json{{"algebra", a.alg ? a.alg->signature() : ""}, {"coords", coords}};
}

LieElement lie_from_json(const Json& j, const HandlePtr& h) {
    LieElement a{h, {}};
    for (const auto& [k, v] : j.at("coords").items()) {
        int d = std::stoi(k);
        SparseRow row;
        for (const auto& e : v) row.emplace_back(e.at(0).get<int>(), parse_rat(e.at(1).get<std::string>()));
        if (!row.empty()) a.coords[d] = row;
    }
    return a;
}

Json braid_to_json(const BraidWord& w) {
    Json letters = Json::array();
    for (const auto& [i, e] : w.letters) letters.push_back(i * e);
    return Json{{"strands", w.strands}, {"letters", letters}, {"text", w.str()}};
}

BraidWord braid_from_json(const Json& j) {
    BraidWord w;
    w.strands = j.at("strands").get<int>();
    for (const auto& l : j.at("letters")) {
        int v = l.get<int>();
        w.letters.emplace_back(std::abs(v), v > 0 ? 1 : -1);
    }
    return BraidWord(w.strands, w.letters);
}

Json morword_to_json(const MorWord& w) {
    Json letters = Json::array();
    ParObject cur = w.source;
    for (const auto& g : w.letters) {
        Json shift = Json::object();
        if (cur.modulus >= 1)
            for (const auto& [k, v] : cur.labels) shift[std::to_string(k)] = v;
        letters.push_back(Json{{"head", head_str(g.head)},
                               {"blocks", g.blocks},
                               {"shift", shift},
                               {"exp", g.exp}});
        cur = apply_letter(cur, g);
    }
    return Json{{"source", w.source.str()},
                {"target", w.target.str()},
                {"modulus", w.source.modulus},
                {"letters", letters}};
}

Json pacd_to_json(const PaCDGammaMorphism& m) {
    return Json{{"src", m.src.str()}, {"tgt", m.tgt.str()}, {"N", m.body.N},
                {"payload", uea_to_json(m.body.payload)}};
}

Json assoc_to_json(const AssocTuple& t, int certified_degree) {
    return Json{{"kind", "assoc"},
                {"N", 1},
                {"mu", rat_str(t.mu)},
                {"certified_degree", certified_degree},
                {"phi", uea_to_json(t.phi)}};
}

Json cycassoc_to_json(const CycAssocTuple& t, int certified_degree) {
    return Json{{"kind", "cycassoc"},
                {"N", t.N},
                {"mu", rat_str(t.base.mu)},
                {"certified_degree", certified_degree},
                {"phi", uea_to_json(t.base.phi)},
                {"psi", uea_to_json(t.psi)}};
}

Json gt_to_json(const GTElement& a) {
    return Json{{"kind", "gt"}, {"N", 1}, {"lambda", rat_str(a.lambda)},
                {"certified_degree", a.f.trunc}, {"f", uea_to_json(a.f)}};
}

Json gtm_to_json(const GTMElement& a) {
    return Json{{"kind", "gtm"},        {"N", a.N},
                {"lambda", rat_str(a.base.lambda)}, {"certified_degree", a.base.f.trunc},
                {"f", uea_to_json(a.base.f)},       {"g", uea_to_json(a.g)}};
}

Json grt_to_json(const GRTElement& a) {
    return Json{{"kind", "grt"}, {"N", 1}, {"lambda", rat_str(a.lambda)},
                {"certified_degree", a.g.trunc}, {"g", uea_to_json(a.g)}};
}

Json grtgamma_to_json(const GRTGammaElement& a) {
    return Json{{"kind", "grtgamma"},   {"N", a.N},
                {"lambda", rat_str(a.lambda)}, {"certified_degree", a.g.trunc},
                {"g", uea_to_json(a.g)},       {"h", uea_to_json(a.h)}};
}

TorsorFile torsor_from_json(const Json& j) {
    TorsorFile f;
    f.kind = j.at("kind").get<std::string>();
    f.N = j.at("N").get<int>();
    f.certified_degree = j.value("certified_degree", 0);
    auto series_trunc = [&](const char* key) { return j.at(key).at("trunc").get<int>(); };
    if (f.kind == "assoc") {
        f.trunc = series_trunc("phi");
        auto f2 = free_handle(2, f.trunc);
        f.assoc = AssocTuple{parse_rat(j.at("mu").get<std::string>()),
                             uea_from_json(j.at("phi"), f2)};
    } else if (f.kind == "cycassoc") {
        f.trunc = series_trunc("phi");
        auto f2 = free_handle(2, f.trunc);
        auto fN1 = free_handle(f.N + 1, f.trunc);
        f.cycassoc = CycAssocTuple{AssocTuple{parse_rat(j.at("mu").get<std::string>()),
                                              uea_from_json(j.at("phi"), f2)},
                                   uea_from_json(j.at("psi"), fN1), f.N};
    } else if (f.kind == "gt") {
        f.trunc = series_trunc("f");
        f.gt = GTElement{parse_rat(j.at("lambda").get<std::string>()),
                         uea_from_json(j.at("f"), free_handle(2, f.trunc))};
    } else if (f.kind == "gtm") {
        f.trunc = series_trunc("f");
        f.gtm = GTMElement{GTElement{parse_rat(j.at("lambda").get<std::string>()),
                                     uea_from_json(j.at("f"), free_handle(2, f.trunc))},
                           uea_from_json(j.at("g"), free_handle(f.N + 1, f.trunc)), f.N};
    } else if (f.kind == "grt") {
        f.trunc = series_trunc("g");
        f.grt = GRTElement{parse_rat(j.at("lambda").get<std::string>()),
                           uea_from_json(j.at("g"), free_handle(2, f.trunc))};
    } else if (f.kind == "grtgamma") {
        f.trunc = series_trunc("g");
        f.grtgamma = GRTGammaElement{parse_rat(j.at("lambda").get<std::string>()),
                                     uea_from_json(j.at("g"), free_handle(2, f.trunc)),
                                     uea_from_json(j.at("h"), free_handle(f.N + 1, f.trunc)), f.N};
    } else {
        throw std::invalid_argument("torsor_from_json: unknown kind " + f.kind);
    }
    return f;
}

Json solve_report_to_json(const SolveReport& r) {
    Json stats = Json::array();
    for (const auto& s : r.stats)
        stats.push_back(Json{{"degree", s.degree},
                             {"unknowns", s.unknowns},
                             {"rows", s.rows},
                             {"rank", s.rank},
                             {"nullity", s.nullity}});
    Json j{{"certified_degree", r.certified_degree}, {"obstructed", r.obstructed}, {"degrees", stats}};
    if (r.obstructed) {
        j["obstruction_degree"] = r.obstruction_degree;
        j["obstruction_detail"] = r.obstruction_detail;
    }
    return j;
}

Json validation_to_json(const ValidationReport& r) {
    Json lines = Json::array();
    for (const auto& l : r.lines) {
        Json e{{"id", l.id}, {"status", l.pass ? "pass" : "fail"}};
        if (!l.pass && l.first_fail_degree >= 0) e["first_fail_degree"] = l.first_fail_degree;
        if (!l.detail.empty()) e["details"] = l.detail;
        lines.push_back(e);
    }
    return Json{{"pass", r.pass}, {"checks", lines}};
}

}  // namespace moperad
