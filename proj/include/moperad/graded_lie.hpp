#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "moperad/linalg.hpp"
#include "moperad/lyndon.hpp"
#include "moperad/rational.hpp"

namespace moperad {

// Strand names are abstract symbols (ints); 0 is the reserved frozen name.
constexpr int kFrozenStrand = 0;

struct GenSymbol {
    enum Kind { T0i, Tij, FreeGen };
    Kind kind;
    int i = 0, j = 0;    // strands; for FreeGen, i = generator index
    int alpha = 0;       // Z/N label, Tij only

    static GenSymbol t0i(int i);
    // canonicalizes to i < j via t^a_{ij} = t^{-a}_{ji}
    static GenSymbol tij(int i, int j, int alpha, int modulus);
    static GenSymbol free_gen(int idx);

    bool operator<(const GenSymbol& o) const;
    bool operator==(const GenSymbol& o) const;
    std::string str() const;                       // "t0.i", "t.i.j.a", "g.k"
    static GenSymbol parse(const std::string& s, int modulus);
};

struct LiePresentation {
    enum Family { Free, Classical, Cyclotomic };
    Family family = Free;
    std::vector<int> names;       // non-frozen strand names (sorted); empty for Free
    int gamma_modulus = 1;        // N
    std::vector<GenSymbol> gens;  // fixed order = alphabet order
    // homogeneous relations: (degree, coords in the free-Lie Lyndon basis of that degree)
    std::vector<std::pair<int, SparseRow>> relations;

    int gen_index(const GenSymbol& g) const;  // -1 if absent
    std::string signature() const;
};

LiePresentation free_presentation(int num_gens);
LiePresentation t_presentation(const std::vector<int>& names);
LiePresentation t_gamma_presentation(const std::vector<int>& names, int N);

class LieAlgebraHandle;
using HandlePtr = std::shared_ptr<const LieAlgebraHandle>;

// Element of the quotient: exact-rational coordinates in the per-degree
// canonical basis (absent degree = zero).
struct LieElement {
    HandlePtr alg;
    std::map<int, SparseRow> coords;

    bool is_zero() const;
    LieElement& operator+=(const LieElement& o);
    LieElement& operator-=(const LieElement& o);
    LieElement& operator*=(const Rat& c);
    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(const Rat& c, LieElement a) { return a *= c; }
    bool operator==(const LieElement& o) const;
    // truncate to a (possibly lower) degree cap
    LieElement truncated(int degree) const;
};

class LieAlgebraHandle : public std::enable_shared_from_this<LieAlgebraHandle> {
  public:
    LieAlgebraHandle(LiePresentation pres, int max_degree);

    const LiePresentation& pres() const { return pres_; }
    int max_degree() const { return D_; }
    int num_gens() const { return (int)pres_.gens.size(); }
    const FreeLie& flie() const { return *flie_; }
    const std::string& signature() const { return sig_; }

    int dim(int d) const;
    std::vector<int> dims() const;
    // free Lyndon index of the d-degree basis element at position p
    int basis_free_index(int d, int p) const;
    int basis_position(int d, int free_index) const;  // -1 if pivot

    // projection of free Lyndon coords onto the quotient basis
    SparseRow project(int d, SparseRow free_coords) const;
    // section: quotient coords -> free Lyndon coords
    SparseRow lift(int d, const SparseRow& q) const;

    // bracket of quotient basis elements, cached
    const SparseRow& basis_bracket(int d1, int p1, int d2, int p2) const;

    LieElement zero() const;
    LieElement gen(const GenSymbol& g) const;
    LieElement gen(int index) const;
    LieElement from_free(int d, const SparseRow& free_coords) const;

  private:
    LiePresentation pres_;
    int D_;
    std::shared_ptr<const FreeLie> flie_;
    std::string sig_;
    struct Layer {
        Rref ideal;                  // RREF of the relation ideal in degree d
        std::vector<int> basis;      // non-pivot free Lyndon indices (sorted)
        std::map<int, int> basis_pos;
    };
    std::vector<Layer> layers_;  // [d-1] for degree d
    mutable std::mutex cache_mu_;
    mutable std::map<std::tuple<int, int, int, int>, SparseRow> bracket_cache_;
};

HandlePtr build_algebra(const LiePresentation& pres, int max_degree);
// cached factories
HandlePtr free_handle(int num_gens, int D);
HandlePtr t_handle(const std::vector<int>& names, int D);
HandlePtr t_gamma_handle(const std::vector<int>& names, int N, int D);

LieElement bracket(const LieElement& a, const LieElement& b);

struct GammaVector {
    int modulus = 1;
    std::map<int, int> comp;  // strand name -> Z/N (absent = 0)
    int at(int name) const;
    GammaVector operator+(const GammaVector& o) const;
};

// Lie morphism determined by degree-1 images of the generators.
class LieMorphism {
  public:
    LieMorphism(HandlePtr src, HandlePtr dst, std::vector<LieElement> images);
    const HandlePtr& src() const { return src_; }
    const HandlePtr& dst() const { return dst_; }
    LieElement apply(const LieElement& a) const;
    // checks that every relation of the source maps to zero; throws with the
    // offending relation otherwise
    void validate() const;
    LieElement image_of_basis(int d, int p) const;

  private:
    HandlePtr src_, dst_;
    std::vector<LieElement> images_;
    mutable std::map<std::pair<int, int>, LieElement> cache_;
};

// --- operations ---

LieElement central_element(const HandlePtr& t2_gamma);

// insertion of |J| strands at non-frozen strand i (inner algebra classical t_J)
LieMorphism mop_i_outer(const HandlePtr& outer, int i, const std::vector<int>& inner_names,
                        const HandlePtr& target);
LieMorphism mop_i_inner(const HandlePtr& inner_classical, const HandlePtr& target);
LieElement mop_compose_i(const LieElement& a, int i, const std::vector<int>& inner_names);

// frozen-slot composition: outer t^G_I with inner t^G_J, target t^G_{J u I}
LieMorphism mop_0_outer(const HandlePtr& outer, const std::vector<int>& inner_names,
                        const HandlePtr& target);
LieMorphism mop_0_inner(const HandlePtr& inner, const HandlePtr& target);
LieElement mop_compose_0(const LieElement& outer, const std::vector<int>& inner_names);

LieMorphism gamma_map(const HandlePtr& h, const GammaVector& gv);
LieElement gamma_act(const GammaVector& gv, const LieElement& a);

// strand renaming (S-action); name_map must be injective on the handle's names
LieMorphism rename_map(const HandlePtr& h, const std::map<int, int>& name_map,
                       const HandlePtr& target);

LieMorphism substitution(const HandlePtr& src, const HandlePtr& dst,
                         std::vector<LieElement> gen_images);

}  // namespace moperad
