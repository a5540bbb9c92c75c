#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "moperad/uea.hpp"

namespace moperad {

// Shared handles for the torsor layer. In f_{N+1}, generator 0 is X = t_01
// and generator 1+a is y(a) = t^a_12 (the bar-t_2^Gamma identification).
struct TorsorContext {
    int N = 1;
    int D = 4;
    HandlePtr f2;   // x, y
    HandlePtr fN1;  // X, y(0..N-1)
    HandlePtr t3, t4;
    HandlePtr t3g;  // strands {1,2,3}

    static TorsorContext make(int N, int D);
};

struct GTElement {
    Rat lambda;
    UeaElement f;  // group-like over f2
};
struct GTMElement {
    GTElement base;
    UeaElement g;  // group-like over fN1
    int N = 1;
};
struct GRTElement {
    Rat lambda;
    UeaElement g;  // group-like over f2
};
struct GRTGammaElement {
    Rat lambda;
    UeaElement g;  // group-like over f2 (GRT_1 part)
    UeaElement h;  // group-like over fN1
    int N = 1;
};
struct AssocTuple {
    Rat mu;
    UeaElement phi;  // group-like over f2
};
struct CycAssocTuple {
    AssocTuple base;
    UeaElement psi;  // group-like over fN1
    int N = 1;
};

GTElement gt_identity(const TorsorContext& cx);
GTMElement gtm_identity(const TorsorContext& cx);
GRTElement grt_identity(const TorsorContext& cx);
GRTGammaElement grtgamma_identity(const TorsorContext& cx);

// The group law of sec 2.6 (PowerFirst) and the variant order of sec 4.5
// (ConjFirst); PowerFirst is the one compatible with the left action and is
// the default everywhere.
enum class GtLawVariant { PowerFirst, ConjFirst };

GTElement gt_compose(const TorsorContext& cx, const GTElement& a, const GTElement& b,
                     GtLawVariant variant = GtLawVariant::PowerFirst);
GTMElement gtm_compose(const TorsorContext& cx, const GTMElement& a, const GTMElement& b);
GRTElement grt_compose(const TorsorContext& cx, const GRTElement& a, const GRTElement& b);
GRTGammaElement grtgamma_compose(const TorsorContext& cx, const GRTGammaElement& a,
                                 const GRTGammaElement& b);

AssocTuple act_gt_on_assoc(const TorsorContext& cx, const GTElement& a, const AssocTuple& t);
AssocTuple act_assoc_grt(const TorsorContext& cx, const AssocTuple& t, const GRTElement& b);
CycAssocTuple act_gtm_on_cycassoc(const TorsorContext& cx, const GTMElement& a,
                                  const CycAssocTuple& t);
CycAssocTuple act_cycassoc_grtgamma(const TorsorContext& cx, const CycAssocTuple& t,
                                    const GRTGammaElement& b);

struct CheckLine {
    std::string id;
    bool pass = false;
    int first_fail_degree = -1;  // -1 = none
    std::string detail;
};
struct ValidationReport {
    bool pass = true;
    std::vector<CheckLine> lines;
    void add(CheckLine line);
};

// exact per-equation validators through degree D (= cx.D)
ValidationReport validate_assoc(const TorsorContext& cx, const AssocTuple& t);
// gamma_variant relabels alpha = (0,1) to (0,gamma) in the octogon
ValidationReport validate_cycassoc(const TorsorContext& cx, const CycAssocTuple& t,
                                   int gamma_variant = 1);
ValidationReport validate_grt(const TorsorContext& cx, const GRTElement& b);
ValidationReport validate_grtgamma(const TorsorContext& cx, const GRTGammaElement& b);
// pentagon-type equations are checked through the action on a reference
// (cyclotomic) associator; passing nullptr reports that check as failed with
// an instruction to run the solver first
ValidationReport validate_gt(const TorsorContext& cx, const GTElement& a, const AssocTuple* ref);
ValidationReport validate_gtm(const TorsorContext& cx, const GTMElement& a,
                              const CycAssocTuple* ref);

// residual of the cyclotomic octogon as a U(f_{N+1}) element (lhs - 1)
UeaElement octogon_residual(const TorsorContext& cx, const CycAssocTuple& t, int gamma_variant = 1);
// residual of the mixed pentagon in U(t_3^Gamma)
UeaElement pseudotwist_residual(const TorsorContext& cx, const CycAssocTuple& t);
UeaElement hexagon_residual(const TorsorContext& cx, const AssocTuple& t);
UeaElement pentagon_residual(const TorsorContext& cx, const AssocTuple& t);
UeaElement duality_residual(const TorsorContext& cx, const AssocTuple& t);

// substitution psi(X | y(a), y(a+1), ...), indices plainly mod N (graded side)
UeaElement shift_subst(const TorsorContext& cx, const UeaElement& u, int a);
// group-side shift in ker(phi_N): slot b -> X^q y((b+a) mod N) X^{-q} with
// q = floor((b+a)/N), matching y(c+N) = X y(c) X^{-1}
UeaElement shift_subst_group(const TorsorContext& cx, const UeaElement& u, int a);

int first_nonzero_degree(const UeaElement& u);  // 0 if u == 0

// random group-like exp(random Lie element with coords in [-max_abs, max_abs],
// degrees min_degree..D)
UeaElement random_grouplike(const HandlePtr& h, int D, std::mt19937& rng, int max_abs = 2,
                            int min_degree = 1);

}  // namespace moperad
