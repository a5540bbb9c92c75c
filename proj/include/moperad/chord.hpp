#pragma once

#include <string>
#include <vector>

#include "moperad/par_objects.hpp"
#include "moperad/uea.hpp"

namespace moperad {

// Morphism of CD^Gamma(n) in normal form "chord payload, then pure label
// shift": src -> tgt with payload u in U(t_n^Gamma) on the named strands.
struct CDGammaMorphism {
    std::vector<int> strands;  // non-frozen names, sorted
    int N = 1;
    GammaVector src_labels, tgt_labels;
    UeaElement payload;  // over t_gamma_handle(strands, N, D)

    GammaVector shift() const;  // tgt - src
};

// Parenthesized version: endpoint objects of Pa_0^Gamma carrying the labels.
struct PaCDGammaMorphism {
    ParObject src, tgt;
    CDGammaMorphism body;
};

CDGammaMorphism cd_identity(const std::vector<int>& strands, int N, const GammaVector& at, int D);
// crossed-product composition: (u, d)(v, e) = (u * d.v, d + e)
CDGammaMorphism cd_compose(const CDGammaMorphism& f, const CDGammaMorphism& g);
CDGammaMorphism cd_inverse(const CDGammaMorphism& f);
CDGammaMorphism cd_add(const CDGammaMorphism& f, const CDGammaMorphism& g);  // same endpoints
bool cd_equal(const CDGammaMorphism& f, const CDGammaMorphism& g);

PaCDGammaMorphism pacd_compose(const PaCDGammaMorphism& f, const PaCDGammaMorphism& g);
PaCDGammaMorphism pacd_inverse(const PaCDGammaMorphism& f);
PaCDGammaMorphism pacd_add(const PaCDGammaMorphism& f, const PaCDGammaMorphism& g);
bool pacd_equal(const PaCDGammaMorphism& f, const PaCDGammaMorphism& g);

// Generators (source-labelled; the Gamma-translate is "the same letter at the
// translated object", with untouched payload).
//   X^{A,B}: object transposition, unit payload
//   H^{A,B}: endo, payload sum of t^0_ij over i in A, j in B
//   a^{A,B,C}, b^{F,A,B}: reparenthesizations, unit payload
//   K^{F,A}: endo, payload = moperadic image of t_01
//   L^{F,A}: unit payload, label shift +1 on A
PaCDGammaMorphism cd_gen_X(const ParObject& src, const std::vector<int>& A,
                           const std::vector<int>& B, int D);
PaCDGammaMorphism cd_gen_H(const ParObject& src, const std::vector<int>& A,
                           const std::vector<int>& B, int D);
PaCDGammaMorphism cd_gen_a(const ParObject& src, const std::vector<int>& A,
                           const std::vector<int>& B, const std::vector<int>& C, int D);
PaCDGammaMorphism cd_gen_b(const ParObject& src, const std::vector<int>& F,
                           const std::vector<int>& A, const std::vector<int>& B, int D);
PaCDGammaMorphism cd_gen_K(const ParObject& src, const std::vector<int>& F,
                           const std::vector<int>& A, int D);
PaCDGammaMorphism cd_gen_L(const ParObject& src, const std::vector<int>& F,
                           const std::vector<int>& A, int D);

// moperadic compositions (canonical renaming as for objects)
PaCDGammaMorphism cd_mop_compose_i(const PaCDGammaMorphism& f, int i, const ParObject& inner_pa,
                                   const UeaElement& inner_payload_classical);
PaCDGammaMorphism cd_mop_compose_0(const PaCDGammaMorphism& f, const PaCDGammaMorphism& g);

struct CdRelationReport {
    int tag = 0;
    bool pass = false;
    std::string detail;
};

// relations (30)..(36) of the parenthesized N-chord diagram moperad, checked
// exactly in the crossed-product model at truncation D
CdRelationReport check_cd_relation(int tag, int N, int D);

}  // namespace moperad
