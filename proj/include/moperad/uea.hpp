#pragma once

#include <map>
#include <vector>

#include "moperad/graded_lie.hpp"

namespace moperad {

// PBW monomial: non-decreasing sequence of global Lie-basis ids. The global
// order is (degree, position); id = offset(degree) + position.
using PbwMonomial = std::vector<int>;

// Degree-truncated element of U(g) in PBW normal form.
struct UeaElement {
    HandlePtr alg;
    int trunc = 0;
    std::map<PbwMonomial, Rat> terms;  // empty monomial = unit

    bool is_zero() const { return terms.empty(); }
    Rat unit_coeff() const;
    UeaElement& operator+=(const UeaElement& o);
    UeaElement& operator-=(const UeaElement& o);
    UeaElement& operator*=(const Rat& c);
    friend UeaElement operator+(UeaElement a, const UeaElement& b) { return a += b; }
    friend UeaElement operator-(UeaElement a, const UeaElement& b) { return a -= b; }
    bool operator==(const UeaElement& o) const;
    UeaElement truncated(int degree) const;
    // multiplies every degree-d component by lambda^d
    UeaElement dilated(const Rat& lambda) const;
};

// global Lie-basis id helpers
int lie_basis_offset(const LieAlgebraHandle& h, int degree);
int lie_basis_degree(const LieAlgebraHandle& h, int id);
int pbw_monomial_degree(const LieAlgebraHandle& h, const PbwMonomial& m);

UeaElement uea_zero(const HandlePtr& h, int trunc);
UeaElement uea_one(const HandlePtr& h, int trunc);
UeaElement uea_from_lie(const LieElement& a, int trunc);
// Lie part = coefficients of the length-1 monomials
LieElement lie_part(const UeaElement& u);
// true iff log(u) is primitive (supported on length-1 PBW monomials)
bool is_grouplike(const UeaElement& u);

UeaElement multiply(const UeaElement& a, const UeaElement& b);
UeaElement uea_pow(const UeaElement& a, long k);  // k >= 0
UeaElement uea_inverse(const UeaElement& a);      // needs unit coeff != 0

UeaElement uea_exp(const LieElement& a, int trunc);
LieElement uea_log(const UeaElement& g);
// g^c = exp(c log g) for group-like g
UeaElement grouplike_pow(const UeaElement& g, const Rat& c);
UeaElement Ad(const UeaElement& g, const UeaElement& a);

// Algebra morphism U(src) -> U(dst) determined by (possibly inhomogeneous)
// Lie images of the source generators; src must be a free handle.
class UeaMorphism {
  public:
    UeaMorphism(HandlePtr src, HandlePtr dst, std::vector<LieElement> gen_images, int trunc);
    UeaElement apply(const UeaElement& u) const;

  private:
    HandlePtr src_, dst_;
    std::vector<LieElement> images_;
    int trunc_;
    mutable std::map<int, LieElement> lie_cache_;    // free Lie basis id -> image
    mutable std::map<int, UeaElement> u_cache_;      // id -> U-embedded image
    LieElement lie_image(int id) const;
};

// moves an element onto a handle with the same presentation but a different
// degree cap (basis ids agree degree-wise); truncates to the new cap
UeaElement rebase(const UeaElement& u, const HandlePtr& new_handle);

// extension of a Lie morphism to the enveloping algebras (monomial-wise)
UeaElement apply_lie_morphism(const LieMorphism& m, const UeaElement& u);

// f group-like over a free handle with k generators; args are k group-likes
// in the target handle. Evaluates the same group word on the arguments.
UeaElement group_substitute(const UeaElement& f, const HandlePtr& target,
                            const std::vector<UeaElement>& args);

// X -> exp(x)^N, y(a) -> exp(x)^{-a} exp(y) exp(x)^a  (f_{N+1} -> U(f_2))
UeaElement kernel_embed_phiN(const UeaElement& g, int N, const HandlePtr& f2, int trunc);

}  // namespace moperad
