#ifndef SKEWCAT_CONGRUENCE_HPP
#define SKEWCAT_CONGRUENCE_HPP

#include <optional>
#include <vector>

#include "skewcat/hom.hpp"
#include "skewcat/skew_lattice.hpp"

namespace skewcat {

// An equivalence relation on 0..n-1 in canonical form: class ids are assigned
// in order of each class's smallest element, so partitions compare by ==.
struct Congruence {
  std::vector<int> class_of;
  std::vector<std::vector<Elt>> blocks;

  int size() const { return static_cast<int>(class_of.size()); }
  int num_classes() const { return static_cast<int>(blocks.size()); }
  // Smallest element of the class, used as its representative everywhere.
  Elt rep(int cls) const { return blocks[cls][0]; }

  static Congruence from_class_of(const std::vector<int>& raw);
  static Congruence identity(int n);

  bool operator==(const Congruence&) const = default;
};

// A congruence must be compatible with both operations on either side; the
// witness is (x, x', y) with x ~ x' but results in different classes.
std::optional<Witness> congruence_violation(const SkewLattice& s, const Congruence& c);
bool is_congruence(const SkewLattice& s, const Congruence& c);

// Green-type relations.  Each is verified to be a congruence before being
// returned; a failure is a library bug and raises
// InternalCompatibilityViolation.
//
//   d: x^y^x == x and y^x^y == y
//   l: x^y == x and y^x == y
//   r: x^y == y and y^x == x
Congruence d_relation(const SkewLattice& s);
Congruence l_relation(const SkewLattice& s);
Congruence r_relation(const SkewLattice& s);

struct Quotient {
  SkewLattice algebra;
  SkewHom projection;
};

// Quotient algebra on the canonical blocks, with the projection map.  Throws
// NotACongruence when the partition is not compatible.
Quotient quotient(const SkewLattice& s, const Congruence& c);

// Quotient by the d relation.  The result is always a lattice (asserted); it
// is the universal commutative image of s.
Quotient reflection(const SkewLattice& s);

// Factors a homomorphism into a lattice through the reflection: the unique
// map h_bar with h_bar(class of x) == h(x).  Throws PreconditionUnmet when
// the target is not commutative.
SkewHom lift_through_reflection(const SkewHom& h);

// h is proper when every element of the target reflection lies below some
// image: for all y there is x with h_bar(x) >= y.  In the finite case this is
// equivalent to h_bar preserving the top; both are computed and compared.
bool is_proper(const SkewHom& h);

// Elements of a commutative algebra that are not joins of strictly smaller
// elements (zero excluded).
std::vector<Elt> join_irreducibles(const SkewLattice& lattice);

// All proper homomorphisms into the two-element lattice, computed from the
// principal filters of join-irreducibles in the reflection and lifted back.
// Cross-checked against plain map enumeration when the algebra has at most 12
// elements.  Requires a strongly distributive algebra.  Sorted by map.
std::vector<SkewHom> enumerate_proper_homs_to_2(const SkewLattice& s);

}  // namespace skewcat

#endif  // SKEWCAT_CONGRUENCE_HPP
