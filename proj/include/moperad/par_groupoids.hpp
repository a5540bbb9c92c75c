#pragma once

#include <optional>
#include <string>
#include <vector>

#include "moperad/braid.hpp"
#include "moperad/graded_lie.hpp"
#include "moperad/par_objects.hpp"

namespace moperad {

enum class Head { R, Rt, Phi, E, Psi };
std::string head_str(Head h);

// One generator instance: the blocks are in-order leaf sequences of adjacent
// sibling subtrees of the running source object. Patterns:
//   R/Rt: (A B) -> (B A)            blocks = {A, B}
//   Phi : ((A B) C) -> (A (B C))    blocks = {A, B, C}
//   Psi : ((F A) B) -> (F (A B))    blocks = {F, A, B}, 0 in F
//   E   : (F A) -> (F A)            blocks = {F, A}, 0 in F; labels of A +1
// Gamma-translates are implicit: the running object's labels determine the
// lift, so letters carry no label data.
struct GenLetter {
    Head head;
    std::vector<std::vector<int>> blocks;
    int exp = 1;  // +-1
};

// Formal composable word in the generators, composed left to right.
struct MorWord {
    ParObject source;
    std::vector<GenLetter> letters;
    ParObject target;  // computed

    bool is_endo() const { return source == target; }
};

// object rewrite of one letter; throws if the pattern does not match
ParObject apply_letter(const ParObject& obj, const GenLetter& letter);

MorWord identity_word(const ParObject& at);
MorWord make_word(ParObject source, std::vector<GenLetter> letters);
MorWord generator(Head head, const ParObject& source, std::vector<std::vector<int>> blocks,
                  int exp = 1);
MorWord compose(const MorWord& a, const MorWord& b);
MorWord invert(const MorWord& a);

// functor to (annular) braids: R/Rt -> block half-twists, E -> annular block
// loop, Phi/Psi -> identity; strand positions follow the source leaf order
BraidWord evaluate_to_braid(const MorWord& a);

bool equal_morphisms(const MorWord& a, const MorWord& b);

// Moperadic compositions on morphisms. The *_insert versions require
// disjoint names; the compose versions apply the canonical renaming.
MorWord mor_insert_i(const MorWord& outer, int i, const MorWord& inner_pab);
MorWord mor_insert_0(const MorWord& outer, const MorWord& inner);
MorWord mor_compose_i(const MorWord& outer, int i, const MorWord& inner_pab);
MorWord mor_compose_0(const MorWord& outer, const MorWord& inner);

// strand deletion (arity-decreasing operation); degenerate letters vanish
MorWord delete_strand(const MorWord& a, int name);

MorWord rename_word(const MorWord& a, const std::map<int, int>& name_map);
// translate of the whole word by gv (shifts source labels; the lift follows)
MorWord gamma_act_word(const GammaVector& gv, const MorWord& a);

// per-strand algebraic E-count of an endomorphism, mod N
GammaVector gamma_weight(const MorWord& a, int N);

struct RelationReport {
    std::string tag;
    bool pass = false;
    std::string lhs, rhs;              // printed words
    std::string lhs_braid, rhs_braid;  // printed evaluations
    std::string detail;
};

// tags: U,H1,H2,P (PaB), cU,MP,RP,O (PaB^1), tU,tMP,tRP,tO (PaB^Gamma, needs N)
RelationReport check_relation(const std::string& tag, int N = 1);
std::vector<std::string> relation_tags(const std::string& which);  // pab|pab1|pabgamma

std::string word_str(const MorWord& a);

}  // namespace moperad
