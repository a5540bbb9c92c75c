#include "moperad/par_groupoids.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace moperad {

std::string head_str(Head h) {
    switch (h) {
        case Head::R: return "R";
        case Head::Rt: return "Rt";
        case Head::Phi: return "Phi";
        case Head::E: return "E";
        case Head::Psi: return "Psi";
    }
    return "?";
}

namespace {

std::vector<int> concat(const std::vector<std::vector<int>>& blocks) {
    std::vector<int> out;
    for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
    return out;
}

bool contains_zero(const std::vector<int>& b) {
    return std::find(b.begin(), b.end(), 0) != b.end();
}

// replace the unique subtree spanning `span` by `repl`
ParTree replace_block(const ParTree& t, const std::vector<int>& span, const ParTree& repl,
                      bool& done) {
    if (t.leaves() == span) {
        done = true;
        return repl;
    }
    if (t.is_leaf()) return t;
    bool d0 = false, d1 = false;
    ParTree l = replace_block(t.kids[0], span, repl, d0);
    if (d0) {
        done = true;
        return ParTree::pair(std::move(l), t.kids[1]);
    }
    ParTree r = replace_block(t.kids[1], span, repl, d1);
    done = d1;
    return ParTree::pair(t.kids[0], std::move(r));
}

ParTree subtree_of(const ParTree& t, const std::vector<int>& block, const char* what) {
    const ParTree* p = find_block(t, block);
    if (!p) {
        std::ostringstream os;
        os << what << ": block {";
        for (int x : block) os << x << " ";
        os << "} is not a subtree";
        throw std::invalid_argument(os.str());
    }
    return *p;
}

// forward source/target tree patterns of a generator
void letter_patterns(const GenLetter& g, const ParTree& any_side_tree, ParTree& src_pat,
                     ParTree& tgt_pat, std::vector<int>& span) {
    const auto& bl = g.blocks;
    auto need = [&](size_t n) {
        if (bl.size() != n) throw std::invalid_argument("letter: wrong block count");
        for (const auto& b : bl)
            if (b.empty()) throw std::invalid_argument("letter: empty block");
    };
    span = concat(bl);
    // the constituent subtrees are read off from whichever side we were given
    switch (g.head) {
        case Head::R:
        case Head::Rt: {
            need(2);
            ParTree A = subtree_of(any_side_tree, bl[0], "R"),
                    B = subtree_of(any_side_tree, bl[1], "R");
            src_pat = ParTree::pair(A, B);
            tgt_pat = ParTree::pair(B, A);
            break;
        }
        case Head::Phi: {
            need(3);
            ParTree A = subtree_of(any_side_tree, bl[0], "Phi"),
                    B = subtree_of(any_side_tree, bl[1], "Phi"),
                    C = subtree_of(any_side_tree, bl[2], "Phi");
            src_pat = ParTree::pair(ParTree::pair(A, B), C);
            tgt_pat = ParTree::pair(A, ParTree::pair(B, C));
            break;
        }
        case Head::Psi: {
            need(3);
            if (!contains_zero(bl[0])) throw std::invalid_argument("Psi: first block must hold 0");
            ParTree F = subtree_of(any_side_tree, bl[0], "Psi"),
                    A = subtree_of(any_side_tree, bl[1], "Psi"),
                    B = subtree_of(any_side_tree, bl[2], "Psi");
            src_pat = ParTree::pair(ParTree::pair(F, A), B);
            tgt_pat = ParTree::pair(F, ParTree::pair(A, B));
            break;
        }
        case Head::E: {
            need(2);
            if (!contains_zero(bl[0])) throw std::invalid_argument("E: first block must hold 0");
            ParTree F = subtree_of(any_side_tree, bl[0], "E"),
                    A = subtree_of(any_side_tree, bl[1], "E");
            src_pat = ParTree::pair(F, A);
            tgt_pat = src_pat;
            break;
        }
    }
}

int position_of(const std::vector<int>& order, int leaf) {
    for (int p = 0; p < (int)order.size(); ++p)
        if (order[p] == leaf) return p;
    throw std::logic_error("position_of: leaf missing");
}

}  // namespace

ParObject apply_letter(const ParObject& obj, const GenLetter& g) {
    ParTree src_pat, tgt_pat;
    std::vector<int> span;
    letter_patterns(g, obj.tree, src_pat, tgt_pat, span);
    const ParTree& from = g.exp > 0 ? src_pat : tgt_pat;
    const ParTree& to = g.exp > 0 ? tgt_pat : src_pat;
    span = from.leaves();
    if (!(subtree_of(obj.tree, span, "letter") == from))
        throw std::invalid_argument("letter: pattern does not match at " + obj.str());
    bool done = false;
    ParObject out = obj;
    out.tree = replace_block(obj.tree, span, to, done);
    if (!done) throw std::logic_error("apply_letter: replace failed");
    if (g.head == Head::E && obj.modulus >= 1) {
        std::map<int, int> sh;
        for (int x : g.blocks[1]) sh[x] = g.exp;
        out = shift_labels(out, sh);
    }
    out.validate();
    return out;
}

MorWord identity_word(const ParObject& at) { return MorWord{at, {}, at}; }

MorWord make_word(ParObject source, std::vector<GenLetter> letters) {
    MorWord w;
    w.source = std::move(source);
    w.source.validate();
    ParObject cur = w.source;
    for (auto& l : letters) {
        cur = apply_letter(cur, l);
        w.letters.push_back(std::move(l));
    }
    w.target = cur;
    return w;
}

MorWord generator(Head head, const ParObject& source, std::vector<std::vector<int>> blocks,
                  int exp) {
    if ((head == Head::E || head == Head::Psi) && !source.frozen())
        throw std::invalid_argument("E/Psi need a frozen object");
    return make_word(source, {GenLetter{head, std::move(blocks), exp}});
}

MorWord compose(const MorWord& a, const MorWord& b) {
    if (!(a.target == b.source)) throw std::invalid_argument("compose: endpoint mismatch");
    MorWord w = a;
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    w.target = b.target;
    return w;
}

MorWord invert(const MorWord& a) {
    MorWord w;
    w.source = a.target;
    for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) {
        GenLetter g = *it;
        g.exp = -g.exp;
        w.letters.push_back(std::move(g));
    }
    w.target = a.source;
    // sanity: recompute
    return make_word(w.source, w.letters);
}

// evaluation conventions (fixed by the relation suite): R is the positive
// block half-twist; E is the annular block loop together with one positive
// full twist of the moving block
BraidWord evaluate_to_braid(const MorWord& a) {
    int n = (int)a.source.leaves().size();
    BraidWord out;
    out.strands = std::max(1, n);
    ParObject cur = a.source;
    for (const auto& g : a.letters) {
        ParObject next = apply_letter(cur, g);
        const ParObject& at_src = g.exp > 0 ? cur : next;  // generator's own source
        auto order = at_src.leaves();
        BraidWord piece;
        piece.strands = out.strands;
        switch (g.head) {
            case Head::R: {
                int off = position_of(order, g.blocks[0][0]);
                piece = shifted(block_cross((int)g.blocks[0].size(), (int)g.blocks[1].size()), off,
                                out.strands);
                break;
            }
            case Head::Rt: {
                int off = position_of(order, g.blocks[0][0]);
                piece = shifted(block_cross((int)g.blocks[1].size(), (int)g.blocks[0].size()), off,
                                out.strands)
                            .inverse();
                break;
            }
            case Head::E: {
                int f = (int)g.blocks[0].size(), m = (int)g.blocks[1].size();
                int off = position_of(order, g.blocks[0][0]);
                if (off != 0) throw std::logic_error("E: frozen block must sit leftmost");
                piece = shifted(block_cross(f, m), 0, out.strands);
                piece *= shifted(block_cross(m, f), 0, out.strands);
                piece *= shifted(full_twist(m), f, out.strands);
                break;
            }
            case Head::Phi:
            case Head::Psi: break;  // straight-line paths
        }
        if (g.exp < 0) piece = piece.inverse();
        out *= piece;
        cur = next;
    }
    return out;
}

bool equal_morphisms(const MorWord& a, const MorWord& b) {
    if (a.source.modulus != b.source.modulus)
        throw std::invalid_argument("equal_morphisms: flavor mismatch");
    if (!(a.source == b.source) || !(a.target == b.target)) return false;
    return equal(evaluate_to_braid(a), evaluate_to_braid(b));
}

namespace {

// replace leaf `name` by sequence `repl` inside block lists
std::vector<std::vector<int>> expand_blocks(const std::vector<std::vector<int>>& blocks, int name,
                                            const std::vector<int>& repl) {
    std::vector<std::vector<int>> out;
    for (const auto& b : blocks) {
        std::vector<int> nb;
        for (int x : b) {
            if (x == name)
                nb.insert(nb.end(), repl.begin(), repl.end());
            else
                nb.push_back(x);
        }
        out.push_back(std::move(nb));
    }
    return out;
}

}  // namespace

MorWord mor_insert_i(const MorWord& outer, int i, const MorWord& inner) {
    if (inner.source.frozen() || inner.source.modulus != 0)
        throw std::invalid_argument("mor_insert_i: inner must be a PaB morphism");
    std::vector<int> inner_src = inner.source.leaves();
    ParObject src = obj_insert_i(outer.source, i, inner.source.tree);
    std::vector<GenLetter> letters;
    for (const auto& g : outer.letters)
        letters.push_back(GenLetter{g.head, expand_blocks(g.blocks, i, inner_src), g.exp});
    MorWord part1 = make_word(src, letters);
    // inner letters act inside the inserted subtree of part1.target
    MorWord part2 = make_word(part1.target, inner.letters);
    return compose(part1, part2);
}

MorWord mor_insert_0(const MorWord& outer, const MorWord& inner) {
    if (!inner.source.frozen())
        throw std::invalid_argument("mor_insert_0: inner must have the frozen strand");
    std::vector<int> inner_src = inner.source.leaves();
    ParObject src = obj_insert_0(outer.source, inner.source);
    std::vector<GenLetter> letters;
    for (const auto& g : outer.letters)
        letters.push_back(GenLetter{g.head, expand_blocks(g.blocks, 0, inner_src), g.exp});
    MorWord part1 = make_word(src, letters);
    MorWord part2 = make_word(part1.target, inner.letters);
    return compose(part1, part2);
}

MorWord mor_compose_i(const MorWord& outer, int i, const MorWord& inner) {
    int m = (int)inner.source.leaves().size();
    std::map<int, int> ren_out, ren_in;
    for (int x : outer.source.leaves())
        if (x > i) ren_out[x] = x + m - 1;
    for (int x : inner.source.leaves()) ren_in[x] = x + i - 1;
    return mor_insert_i(rename_word(outer, ren_out), i, rename_word(inner, ren_in));
}

MorWord mor_compose_0(const MorWord& outer, const MorWord& inner) {
    int m = inner.source.arity();
    std::map<int, int> ren_out;
    for (int x : outer.source.leaves())
        if (x != 0) ren_out[x] = x + m;
    return mor_insert_0(rename_word(outer, ren_out), inner);
}

MorWord delete_strand(const MorWord& a, int name) {
    if (name == 0) throw std::invalid_argument("delete_strand: cannot delete the frozen strand");
    // collapse the object
    std::function<std::optional<ParTree>(const ParTree&)> del =
        [&](const ParTree& t) -> std::optional<ParTree> {
        if (t.is_leaf()) {
            if (t.leaf == name) return std::nullopt;
            return t;
        }
        auto l = del(t.kids[0]), r = del(t.kids[1]);
        if (l && r) return ParTree::pair(*l, *r);
        if (l) return l;
        return r;
    };
    auto src_tree = del(a.source.tree);
    if (!src_tree) throw std::invalid_argument("delete_strand: nothing left");
    ParObject src;
    src.tree = *src_tree;
    src.modulus = a.source.modulus;
    src.labels = a.source.labels;
    src.labels.erase(name);
    std::vector<GenLetter> letters;
    for (const auto& g : a.letters) {
        GenLetter ng = g;
        for (auto& b : ng.blocks) b.erase(std::remove(b.begin(), b.end(), name), b.end());
        bool degenerate = false;
        for (const auto& b : ng.blocks)
            if (b.empty()) degenerate = true;
        if (!degenerate) letters.push_back(std::move(ng));
    }
    return make_word(src, letters);
}

MorWord rename_word(const MorWord& a, const std::map<int, int>& name_map) {
    auto ren = [&](int x) {
        auto it = name_map.find(x);
        return it == name_map.end() ? x : it->second;
    };
    std::vector<GenLetter> letters;
    for (const auto& g : a.letters) {
        GenLetter ng = g;
        for (auto& b : ng.blocks)
            for (auto& x : b) x = ren(x);
        letters.push_back(std::move(ng));
    }
    return make_word(rename_object(a.source, name_map), letters);
}

MorWord gamma_act_word(const GammaVector& gv, const MorWord& a) {
    if (a.source.modulus < 1) throw std::invalid_argument("gamma_act_word: unlabelled word");
    if (gv.modulus != a.source.modulus) throw std::invalid_argument("gamma_act_word: modulus");
    std::map<int, int> sh;
    for (const auto& [k, v] : gv.comp) sh[k] = v;
    return make_word(shift_labels(a.source, sh), a.letters);
}

GammaVector gamma_weight(const MorWord& a, int N) {
    if (!(a.source.tree == a.target.tree))
        throw std::invalid_argument("gamma_weight: not an endomorphism");
    GammaVector gv;
    gv.modulus = N;
    for (int x : a.source.leaves())
        if (x != 0) gv.comp[x] = 0;
    for (const auto& g : a.letters)
        if (g.head == Head::E)
            for (int x : g.blocks[1]) gv.comp[x] = ((gv.comp[x] + g.exp) % N + N) % N;
    return gv;
}

std::string word_str(const MorWord& a) {
    std::ostringstream os;
    os << a.source.str() << " --";
    for (const auto& g : a.letters) {
        os << " " << head_str(g.head);
        for (const auto& b : g.blocks) {
            os << "|";
            for (int x : b) os << x;
        }
        if (g.exp < 0) os << "^-1";
    }
    os << " --> " << a.target.str();
    return os.str();
}

// ---------------- relation catalogue ----------------

namespace {

GenLetter L(Head h, std::vector<std::vector<int>> blocks, int exp = 1) {
    return GenLetter{h, std::move(blocks), exp};
}

struct Sides {
    MorWord lhs, rhs;
};

Sides build_relation(const std::string& tag, int N) {
    const int mod = (tag[0] == 't') ? N : 0;
    auto obj = [&](const char* s) { return parse_object(s, mod); };
    if (tag == "H1" || tag == "H2") {
        Head h = tag == "H1" ? Head::R : Head::Rt;
        ParObject s = obj("(12)3");
        MorWord lhs = make_word(s, {L(h, {{1}, {2}}), L(Head::Phi, {{2}, {1}, {3}}), L(h, {{1}, {3}})});
        MorWord rhs =
            make_word(s, {L(Head::Phi, {{1}, {2}, {3}}), L(h, {{1}, {2, 3}}), L(Head::Phi, {{2}, {3}, {1}})});
        return {lhs, rhs};
    }
    if (tag == "P") {
        ParObject s = obj("((12)3)4");
        MorWord lhs = make_word(s, {L(Head::Phi, {{1, 2}, {3}, {4}}), L(Head::Phi, {{1}, {2}, {3, 4}})});
        MorWord rhs = make_word(s, {L(Head::Phi, {{1}, {2}, {3}}), L(Head::Phi, {{1}, {2, 3}, {4}}),
                                    L(Head::Phi, {{2}, {3}, {4}})});
        return {lhs, rhs};
    }
    if (tag == "MP" || tag == "tMP") {
        ParObject s = obj("((01)2)3");
        MorWord lhs = make_word(s, {L(Head::Psi, {{0, 1}, {2}, {3}}), L(Head::Psi, {{0}, {1}, {2, 3}})});
        MorWord rhs = make_word(s, {L(Head::Psi, {{0}, {1}, {2}}), L(Head::Psi, {{0}, {1, 2}, {3}}),
                                    L(Head::Phi, {{1}, {2}, {3}})});
        return {lhs, rhs};
    }
    if (tag == "RP" || tag == "tRP") {
        ParObject s = obj("(01)2");
        MorWord lhs = make_word(
            s, {L(Head::Psi, {{0}, {1}, {2}}), L(Head::E, {{0}, {1, 2}}), L(Head::Psi, {{0}, {1}, {2}}, -1)});
        MorWord rhs = make_word(s, {L(Head::E, {{0}, {1}}), L(Head::E, {{0, 1}, {2}})});
        return {lhs, rhs};
    }
    if (tag == "O" || tag == "tO") {
        ParObject s = obj("(01)2");
        MorWord lhs = make_word(s, {L(Head::E, {{0, 1}, {2}})});
        MorWord rhs = make_word(s, {L(Head::Psi, {{0}, {1}, {2}}), L(Head::R, {{1}, {2}}),
                                    L(Head::Psi, {{0}, {2}, {1}}, -1), L(Head::E, {{0}, {2}}),
                                    L(Head::Psi, {{0}, {2}, {1}}), L(Head::R, {{2}, {1}}),
                                    L(Head::Psi, {{0}, {1}, {2}}, -1)});
        return {lhs, rhs};
    }
    throw std::invalid_argument("unknown relation tag: " + tag);
}

}  // namespace

RelationReport check_relation(const std::string& tag, int N) {
    RelationReport rep;
    rep.tag = tag;
    try {
        if (tag == "U" || tag == "cU" || tag == "tU") {
            // unit relations: deleting a strand from Phi (resp. Psi) yields the identity
            const int mod = (tag[0] == 't') ? N : 0;
            bool ok = true;
            std::ostringstream lhs, rhs;
            if (tag == "U") {
                MorWord phi = make_word(parse_object("(12)3", 0), {L(Head::Phi, {{1}, {2}, {3}})});
                for (int k : {1, 2, 3}) {
                    MorWord d = delete_strand(phi, k);
                    ok = ok && equal_morphisms(d, identity_word(d.source));
                    lhs << word_str(d) << "; ";
                }
                rhs << "identity";
            } else {
                MorWord psi =
                    make_word(parse_object("(01)2", mod), {L(Head::Psi, {{0}, {1}, {2}})});
                for (int k : {1, 2}) {
                    MorWord d = delete_strand(psi, k);
                    ok = ok && equal_morphisms(d, identity_word(d.source));
                    lhs << word_str(d) << "; ";
                }
                rhs << "identity";
            }
            rep.pass = ok;
            rep.lhs = lhs.str();
            rep.rhs = rhs.str();
            return rep;
        }
        Sides s = build_relation(tag, N);
        rep.lhs = word_str(s.lhs);
        rep.rhs = word_str(s.rhs);
        rep.lhs_braid = evaluate_to_braid(s.lhs).str();
        rep.rhs_braid = evaluate_to_braid(s.rhs).str();
        rep.pass = equal_morphisms(s.lhs, s.rhs);
        if (!rep.pass) rep.detail = "sides differ";
    } catch (const std::exception& e) {
        rep.pass = false;
        rep.detail = e.what();
    }
    return rep;
}

std::vector<std::string> relation_tags(const std::string& which) {
    if (which == "pab") return {"U", "H1", "H2", "P"};
    if (which == "pab1") return {"cU", "MP", "RP", "O"};
    if (which == "pabgamma") return {"tU", "tMP", "tRP", "tO"};
    throw std::invalid_argument("relation_tags: pab|pab1|pabgamma");
}

}  // namespace moperad
