#pragma once

#include <optional>

#include "moperad/torsor.hpp"

namespace moperad {

struct DegreeStats {
    int degree = 0;
    int unknowns = 0;
    int rows = 0;
    int rank = 0;
    int nullity = 0;
};

struct SolveReport {
    int certified_degree = 0;
    bool obstructed = false;
    int obstruction_degree = -1;
    std::string obstruction_detail;
    std::vector<DegreeStats> stats;
};

struct AssocSolveResult {
    AssocTuple tuple;
    SolveReport report;
};
struct CycSolveResult {
    CycAssocTuple tuple;
    SolveReport report;
};

// Degree-by-degree construction of a truncated associator with the given mu.
// Duality, hexagon and pentagon are imposed as affine constraints per degree;
// in underdetermined degrees the lexicographically earliest free coordinates
// are set to zero. An obstruction is reported, never papered over.
AssocSolveResult solve_associator(const Rat& mu, int D);

// Same for the cyclotomic pair (pseudotwist + octogon) over a validated base.
CycSolveResult solve_cyclotomic(const AssocTuple& base, int N, int D);

// Torsor division: the unique group element mapping t to t2, solved degree by
// degree (nullopt if the affine system is inconsistent at some degree).
std::optional<GTElement> gt_between(const TorsorContext& cx, const AssocTuple& t,
                                    const AssocTuple& t2);
std::optional<GTMElement> gtm_between(const TorsorContext& cx, const CycAssocTuple& t,
                                      const CycAssocTuple& t2);
std::optional<GRTElement> grt_between(const TorsorContext& cx, const AssocTuple& t,
                                      const AssocTuple& t2);
std::optional<GRTGammaElement> grtgamma_between(const TorsorContext& cx, const CycAssocTuple& t,
                                                const CycAssocTuple& t2);
// gauge between two cyclotomic solutions over the same base: h with
// t * (1, 1, h) = t2
std::optional<UeaElement> gauge_between(const TorsorContext& cx, const CycAssocTuple& t,
                                        const CycAssocTuple& t2);

// dimension of the degree-by-degree stabilizer (0 = free action at truncation)
int gt_stabilizer_nullity(const TorsorContext& cx, const AssocTuple& t);
int gtm_stabilizer_nullity(const TorsorContext& cx, const CycAssocTuple& t);

}  // namespace moperad
