#ifndef SKEWCAT_DIST_LATTICE_HPP
#define SKEWCAT_DIST_LATTICE_HPP

#include <vector>

#include "skewcat/congruence.hpp"
#include "skewcat/poset.hpp"
#include "skewcat/skew_lattice.hpp"

namespace skewcat {

// A finite bounded distributive lattice: a commutative algebra with its top
// element recorded.  The constructor computes the top and trusts the caller
// for the laws; run validate_dist_lattice on untrusted tables first.
class DistLattice {
 public:
  explicit DistLattice(SkewLattice alg);

  const SkewLattice& alg() const { return alg_; }
  int size() const { return alg_.size(); }
  Elt zero() const { return alg_.zero(); }
  Elt top() const { return top_; }
  Elt meet(Elt x, Elt y) const { return alg_.meet(x, y); }
  Elt join(Elt x, Elt y) const { return alg_.join(x, y); }
  bool leq(Elt x, Elt y) const { return alg_.leq(x, y); }

  bool operator==(const DistLattice&) const = default;

 private:
  SkewLattice alg_;
  Elt top_;
};

// Lattice laws plus commutativity and distributivity.
std::optional<LawViolation> validate_dist_lattice(const SkewLattice& s,
                                                  const Limits& limits = global_limits());

struct DistReflection {
  DistLattice lattice;
  SkewHom projection;
};

// Reflection packaged as a distributive lattice; throws
// NotDistributiveReflection when the quotient is not distributive.
DistReflection distributive_reflection(const SkewLattice& s);

// Prime filters of a finite distributive lattice are exactly the principal
// upsets of join-irreducibles.  Points are indexed by ascending generator and
// ordered by reverse filter inclusion.  Cross-checked against brute-force
// filter enumeration for lattices with at most 16 elements.
struct SpectrumResult {
  Poset poset;
  std::vector<std::vector<Elt>> filters;  // per point, ascending element ids
  std::vector<Elt> generators;            // per point, its join-irreducible
};

SpectrumResult spectrum(const DistLattice& d);

// All downsets of a poset under intersection and union, in ascending mask
// order; element 0 is the empty downset and the last element is the top.
struct DownsetLattice {
  DistLattice lattice;
  std::vector<PointSet> downsets;  // element id -> mask

  int index_of(PointSet mask) const;
};

DownsetLattice downset_lattice(const Poset& p, const Limits& limits = global_limits());

// Unit maps of the finite duality.  Both are verified isomorphisms; a failure
// raises InternalCompatibilityViolation.
struct UnitLattice {
  SpectrumResult spectrum;
  DownsetLattice double_dual;
  std::vector<Elt> map;  // a -> downset of spectrum points whose filter contains a
};

UnitLattice unit_lattice(const DistLattice& d);

struct UnitPoset {
  DownsetLattice dual;
  SpectrumResult double_dual;
  std::vector<int> map;  // x -> point of the spectrum of the downset lattice
};

UnitPoset unit_poset(const Poset& p, const Limits& limits = global_limits());

// Inverse image of downsets along a monotone map: a proper lattice
// homomorphism downset_lattice(y) -> downset_lattice(x).
SkewHom dual_of_monotone(const Poset& x, const Poset& y, const std::vector<int>& f,
                         const Limits& limits = global_limits());

// Inverse image of prime filters along a proper lattice homomorphism
// k : d -> e, as a monotone map spectrum(e) -> spectrum(d).
struct DualOfHom {
  SpectrumResult source;  // spectrum of k's target
  SpectrumResult target;  // spectrum of k's source
  std::vector<int> map;
};

DualOfHom dual_of_proper_hom(const SkewHom& k);

}  // namespace skewcat

#endif  // SKEWCAT_DIST_LATTICE_HPP
