#ifndef SKEWCAT_DUALITY_HPP
#define SKEWCAT_DUALITY_HPP

#include <vector>

#include "skewcat/bundle.hpp"
#include "skewcat/congruence.hpp"
#include "skewcat/hom.hpp"
#include "skewcat/skew_lattice.hpp"

namespace skewcat {

// The skew lattice of all sections of a bundle over all downsets of its base.
// Elements are indexed by downset mask ascending, then section values
// lexicographically; element 0 is the empty section (the zero).  Meet is
// restriction to the common domain, join is override.
struct SectionAlgebra {
  Bundle bundle;
  SkewLattice algebra;
  std::vector<Section> sections;

  Elt element_of(const Section& s) const;
};

// Construction verifies: the result validates as a left-handed strongly
// distributive skew lattice, its lattice reflection's tables coincide with
// the downset lattice of the base, and its natural order is "is a
// restriction of".  Throws SizeOverflow past the configured cap.
SectionAlgebra star_of_bundle(const Bundle& b, const Limits& limits = global_limits());

// The indicator of "x lies in the domain": a proper homomorphism to 2.
SkewHom indicator_hom(const SectionAlgebra& sa, int x);

// Evaluation at a base point, onto the primitive algebra over the stalk of x:
// a section goes to its value at x (shifted past the zero), or to zero when x
// is outside its domain.
SkewHom ev(const SectionAlgebra& sa, int x);

// Kernel congruence of an arbitrary homomorphism.
Congruence kernel_of(const SkewHom& h);

// Transport of sections along a sheaf morphism m from (X,E) to (Y,F), as a
// proper homomorphism F* -> E*.  The two section algebras must belong to
// m.target and m.source respectively.
SkewHom star_of_morphism(const SheafMorphism& m, const SectionAlgebra& f_star,
                         const SectionAlgebra& e_star);

// The congruence relating a and b when (a^d)vc = (b^d)vc for some c, d with
// h(c) = 0, h(d) = 1.  Computed by exhaustive search over all pairs (c, d);
// transitivity, compatibility, refinement of ker(h), and primitivity of the
// quotient are asserted afterwards rather than assumed.  Requires s
// left-handed strongly distributive and h a proper homomorphism onto 2.
Congruence sim_h(const SkewLattice& s, const SkewHom& h);

// All minimal preprime filters over h: minimal sets F that are upward
// closed, meet-closed, absorb joins with h-zero elements, sit inside
// h^{-1}(1), and meet every class of the d-relation inside h^{-1}(1).
// Asserted equal to the nonzero blocks of sim_h.  Throws SizeOverflow when
// h^{-1}(1) is too large to enumerate.
std::vector<std::vector<Elt>> prime_filters_over(const SkewLattice& s, const SkewHom& h);

// The dual bundle of a left-handed strongly distributive skew lattice: base
// points are the proper homomorphisms to 2 under reverse pointwise order,
// the stalk over h is the set of nonzero sim_h classes (ordered by smallest
// member).  The equivalent prime-filter view of the base (spectrum of the
// lattice reflection under reverse filter inclusion) is computed and asserted
// order-isomorphic during construction.
struct DualBundle {
  Bundle bundle;
  std::vector<SkewHom> homs;                 // point -> proper hom to 2
  std::vector<Congruence> sims;              // point -> sim_h
  std::vector<std::vector<int>> class_of;    // point -> element -> stalk or -1
  std::vector<std::vector<Elt>> class_reps;  // point -> stalk -> least element
};

DualBundle dual_bundle(const SkewLattice& s);

// The section a determines over the downset of points where h(a) = 1, whose
// value at h is the sim_h class of a.
Section phi_section(const SkewLattice& s, const DualBundle& db, Elt a);

// a -> phi_section(a), verified to be an isomorphism onto the section
// algebra of the dual bundle.
struct Phi {
  DualBundle dual;
  SectionAlgebra double_dual;
  SkewHom hom;
};

Phi phi(const SkewLattice& s, const Limits& limits = global_limits());

// The bundle self-duality: each base point x corresponds to indicator_hom(x)
// in the dual of the section algebra (an order isomorphism of bases), and
// each stalk element e over x to the class of any section through e at x
// (choice independence asserted; a bijection on every stalk).
struct Psi {
  SectionAlgebra star;
  DualBundle double_dual;
  std::vector<int> base_map;
  std::vector<std::vector<int>> stalk_maps;
};

Psi psi(const Bundle& b, const Limits& limits = global_limits());

// Constructive preimage of phi: builds an element realizing the given
// section of the dual bundle by covering its domain with witness pairs,
// recursing on the cover overlaps, and patching with meets and joins.
// Throws NoRealization if the constructed element fails the final check
// (impossible for genuine inputs; surfaced instead of asserted).
Elt realize_section(const SkewLattice& s, const DualBundle& db, const Section& sec);

// Inverse of star_of_morphism: recovers the base map from the indicator homs
// and the fiber maps from the action on sections through each stalk element
// (choice independence asserted).  Throws NotProper when h is not proper.
SheafMorphism unstar_hom(const SkewHom& h, const SectionAlgebra& f_star,
                         const SectionAlgebra& e_star);

}  // namespace skewcat

#endif  // SKEWCAT_DUALITY_HPP
