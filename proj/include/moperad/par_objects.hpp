#pragma once

#include <map>
#include <string>
#include <vector>

namespace moperad {

// Full binary tree with distinct integer leaf names.
struct ParTree {
    int leaf = -1;               // valid iff kids empty
    std::vector<ParTree> kids;   // 0 or 2

    bool is_leaf() const { return kids.empty(); }
    static ParTree leaf_node(int name);
    static ParTree pair(ParTree l, ParTree r);
    std::vector<int> leaves() const;
    bool operator==(const ParTree& o) const;
};

// Parenthesized (labelled) permutation: object of Pa / Pa_0 / Pa_0^Gamma.
// modulus 0 = unlabelled flavor; >= 1 = Z/N labels on non-frozen leaves.
struct ParObject {
    ParTree tree;
    int modulus = 0;
    std::map<int, int> labels;

    bool frozen() const;                 // contains the reserved leaf 0
    std::vector<int> leaves() const { return tree.leaves(); }
    int arity() const;                   // number of non-frozen leaves
    bool operator==(const ParObject& o) const;
    std::string str() const;

    void validate() const;  // distinct leaves, 0 leftmost if present, label domain
};

ParObject make_object(const ParTree& t, int modulus = 0, std::map<int, int> labels = {});
// grammar: digits are single-character leaf names, juxtaposition pairs
// left-to-right, labels are "_k" suffixes; e.g. "((0 1_0) 2_1)" or "(01)2"
ParObject parse_object(const std::string& s, int modulus = 0);

// partial compositions on objects, explicit names (must be disjoint)
ParObject obj_insert_i(const ParObject& outer, int i, const ParTree& inner);
ParObject obj_insert_0(const ParObject& outer, const ParObject& inner);
// canonical integer renamings: inner j -> j+i-1, outer k>i -> k+m-1
ParObject obj_compose_i(const ParObject& outer, int i, const ParObject& inner_pa);
// inner names kept, outer k -> k+m
ParObject obj_compose_0(const ParObject& outer, const ParObject& inner);

ParObject rename_object(const ParObject& o, const std::map<int, int>& name_map);
ParObject shift_labels(const ParObject& o, const std::map<int, int>& shifts);

// the subtree spanning exactly this in-order leaf sequence, or nullptr
const ParTree* find_block(const ParTree& t, const std::vector<int>& block);

}  // namespace moperad
