#include "moperad/par_objects.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace moperad {

ParTree ParTree::leaf_node(int name) {
    ParTree t;
    t.leaf = name;
    return t;
}

ParTree ParTree::pair(ParTree l, ParTree r) {
    ParTree t;
    t.kids.push_back(std::move(l));
    t.kids.push_back(std::move(r));
    return t;
}

static void collect(const ParTree& t, std::vector<int>& out) {
    if (t.is_leaf()) {
        out.push_back(t.leaf);
        return;
    }
    collect(t.kids[0], out);
    collect(t.kids[1], out);
}

std::vector<int> ParTree::leaves() const {
    std::vector<int> out;
    collect(*this, out);
    return out;
}

bool ParTree::operator==(const ParTree& o) const {
    if (is_leaf() != o.is_leaf()) return false;
    if (is_leaf()) return leaf == o.leaf;
    return kids[0] == o.kids[0] && kids[1] == o.kids[1];
}

bool ParObject::frozen() const {
    auto ls = leaves();
    return std::find(ls.begin(), ls.end(), 0) != ls.end();
}

int ParObject::arity() const {
    return (int)leaves().size() - (frozen() ? 1 : 0);
}

bool ParObject::operator==(const ParObject& o) const {
    return tree == o.tree && modulus == o.modulus && labels == o.labels;
}

void ParObject::validate() const {
    auto ls = leaves();
    std::set<int> seen(ls.begin(), ls.end());
    if (seen.size() != ls.size()) throw std::invalid_argument("ParObject: duplicate leaf names");
    if (!ls.empty() && seen.count(0) && ls[0] != 0)
        throw std::invalid_argument("ParObject: frozen leaf 0 must be leftmost");
    if (modulus >= 1) {
        for (int x : ls) {
            if (x == 0) continue;
            auto it = labels.find(x);
            if (it == labels.end()) throw std::invalid_argument("ParObject: missing label");
            if (it->second < 0 || it->second >= modulus)
                throw std::invalid_argument("ParObject: label out of range");
        }
        if ((int)labels.size() != arity()) throw std::invalid_argument("ParObject: stray labels");
    } else if (!labels.empty()) {
        throw std::invalid_argument("ParObject: labels on unlabelled object");
    }
}

ParObject make_object(const ParTree& t, int modulus, std::map<int, int> labels) {
    ParObject o;
    o.tree = t;
    o.modulus = modulus;
    o.labels = std::move(labels);
    o.validate();
    return o;
}

static void print_tree(const ParTree& t, const ParObject& o, std::ostringstream& os, bool top) {
    if (t.is_leaf()) {
        os << t.leaf;
        if (o.modulus >= 1 && t.leaf != 0) os << "_" << o.labels.at(t.leaf);
        return;
    }
    if (!top) os << "(";
    print_tree(t.kids[0], o, os, false);
    os << " ";
    print_tree(t.kids[1], o, os, false);
    if (!top) os << ")";
}

std::string ParObject::str() const {
    std::ostringstream os;
    print_tree(tree, *this, os, true);
    return os.str();
}

namespace {
struct Parser {
    const std::string& s;
    size_t pos = 0;
    int modulus;
    std::map<int, int> labels;

    void skip() {
        while (pos < s.size() && s[pos] == ' ') ++pos;
    }
    bool eof() {
        skip();
        return pos >= s.size();
    }
    char peek() {
        skip();
        return s[pos];
    }
    ParTree parse_atom() {
        skip();
        if (pos >= s.size()) throw std::invalid_argument("parse_object: unexpected end");
        if (s[pos] == '(') {
            ++pos;
            ParTree t = parse_seq(')');
            skip();
            if (pos >= s.size() || s[pos] != ')') throw std::invalid_argument("parse_object: expected )");
            ++pos;
            return t;
        }
        if (!isdigit(s[pos])) throw std::invalid_argument("parse_object: expected leaf or (");
        int name = s[pos] - '0';
        ++pos;
        if (pos < s.size() && s[pos] == '_') {
            ++pos;
            size_t start = pos;
            while (pos < s.size() && isdigit(s[pos])) ++pos;
            if (start == pos) throw std::invalid_argument("parse_object: expected label digits");
            labels[name] = std::stoi(s.substr(start, pos - start));
        }
        return ParTree::leaf_node(name);
    }
    ParTree parse_seq(char stop) {
        ParTree acc = parse_atom();
        while (!eof() && peek() != stop) acc = ParTree::pair(std::move(acc), parse_atom());
        return acc;
    }
};
}  // namespace

ParObject parse_object(const std::string& s, int modulus) {
    Parser p{s, 0, modulus, {}};
    ParTree t = p.parse_seq('\0');
    if (!p.eof()) throw std::invalid_argument("parse_object: trailing input");
    ParObject o;
    o.tree = std::move(t);
    o.modulus = modulus;
    if (modulus >= 1) {
        for (int x : o.tree.leaves()) {
            if (x == 0) continue;
            auto it = p.labels.find(x);
            o.labels[x] = it == p.labels.end() ? 0 : it->second;
        }
    }
    o.validate();
    return o;
}

static bool replace_leaf(ParTree& t, int name, const ParTree& sub) {
    if (t.is_leaf()) {
        if (t.leaf == name) {
            t = sub;
            return true;
        }
        return false;
    }
    return replace_leaf(t.kids[0], name, sub) || replace_leaf(t.kids[1], name, sub);
}

ParObject obj_insert_i(const ParObject& outer, int i, const ParTree& inner) {
    if (i == 0) throw std::invalid_argument("obj_insert_i: cannot insert at the frozen strand");
    auto outer_ls = outer.leaves();
    if (std::find(outer_ls.begin(), outer_ls.end(), i) == outer_ls.end())
        throw std::invalid_argument("obj_insert_i: strand not present");
    for (int x : inner.leaves())
        if (x != i && std::find(outer_ls.begin(), outer_ls.end(), x) != outer_ls.end())
            throw std::invalid_argument("obj_insert_i: name clash");
    ParObject out;
    out.tree = outer.tree;
    replace_leaf(out.tree, i, inner);
    out.modulus = outer.modulus;
    if (outer.modulus >= 1) {
        out.labels = outer.labels;
        int broadcast = out.labels.at(i);
        out.labels.erase(i);
        for (int x : inner.leaves()) out.labels[x] = broadcast;
    }
    out.validate();
    return out;
}

ParObject obj_insert_0(const ParObject& outer, const ParObject& inner) {
    if (!outer.frozen() || !inner.frozen())
        throw std::invalid_argument("obj_insert_0: both objects need the frozen leaf");
    auto outer_ls = outer.leaves();
    for (int x : inner.leaves())
        if (x != 0 && std::find(outer_ls.begin(), outer_ls.end(), x) != outer_ls.end())
            throw std::invalid_argument("obj_insert_0: name clash");
    ParObject out;
    out.tree = outer.tree;
    replace_leaf(out.tree, 0, inner.tree);
    out.modulus = std::max(outer.modulus, inner.modulus);
    out.labels = outer.labels;
    for (const auto& [k, v] : inner.labels) out.labels[k] = v;
    out.validate();
    return out;
}

ParObject rename_object(const ParObject& o, const std::map<int, int>& name_map) {
    auto ren = [&](int x) {
        auto it = name_map.find(x);
        return it == name_map.end() ? x : it->second;
    };
    std::function<ParTree(const ParTree&)> go = [&](const ParTree& t) -> ParTree {
        if (t.is_leaf()) return ParTree::leaf_node(ren(t.leaf));
        return ParTree::pair(go(t.kids[0]), go(t.kids[1]));
    };
    ParObject out;
    out.tree = go(o.tree);
    out.modulus = o.modulus;
    for (const auto& [k, v] : o.labels) out.labels[ren(k)] = v;
    out.validate();
    return out;
}

ParObject shift_labels(const ParObject& o, const std::map<int, int>& shifts) {
    if (o.modulus < 1) throw std::invalid_argument("shift_labels: unlabelled object");
    ParObject out = o;
    for (const auto& [k, v] : shifts) {
        auto it = out.labels.find(k);
        if (it == out.labels.end()) throw std::invalid_argument("shift_labels: unknown strand");
        it->second = ((it->second + v) % o.modulus + o.modulus) % o.modulus;
    }
    return out;
}

ParObject obj_compose_i(const ParObject& outer, int i, const ParObject& inner_pa) {
    if (inner_pa.modulus != 0 || inner_pa.frozen())
        throw std::invalid_argument("obj_compose_i: inner must be an unlabelled Pa object");
    int m = (int)inner_pa.leaves().size();
    std::map<int, int> ren_out, ren_in;
    for (int x : outer.leaves())
        if (x > i) ren_out[x] = x + m - 1;
    for (int x : inner_pa.leaves()) ren_in[x] = x + i - 1;
    ParObject o2 = rename_object(outer, ren_out);
    ParObject i2 = rename_object(inner_pa, ren_in);
    return obj_insert_i(o2, i, i2.tree);
}

ParObject obj_compose_0(const ParObject& outer, const ParObject& inner) {
    int m = inner.arity();
    std::map<int, int> ren_out;
    for (int x : outer.leaves())
        if (x != 0) ren_out[x] = x + m;
    return obj_insert_0(rename_object(outer, ren_out), inner);
}

const ParTree* find_block(const ParTree& t, const std::vector<int>& block) {
    if (t.leaves() == block) return &t;
    if (t.is_leaf()) return nullptr;
    if (const ParTree* p = find_block(t.kids[0], block)) return p;
    return find_block(t.kids[1], block);
}

}  // namespace moperad
