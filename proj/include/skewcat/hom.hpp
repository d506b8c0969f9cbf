#ifndef SKEWCAT_HOM_HPP
#define SKEWCAT_HOM_HPP

#include <optional>
#include <vector>

#include "skewcat/skew_lattice.hpp"

namespace skewcat {

// A zero-preserving homomorphism between finite skew lattices, carried with
// copies of its source and target so values are self-contained.
struct SkewHom {
  SkewLattice source;
  SkewLattice target;
  std::vector<Elt> map;

  Elt operator()(Elt x) const { return map[x]; }
  bool operator==(const SkewHom&) const = default;
};

// map[x meet y] == map[x] meet map[y], same for join, and map[0] == 0.
bool is_homomorphism(const std::vector<Elt>& map, const SkewLattice& source,
                     const SkewLattice& target);

SkewHom identity_hom(const SkewLattice& s);

// g after f; requires f.target == g.source.
SkewHom compose(const SkewHom& g, const SkewHom& f);

// All zero-preserving homomorphisms source -> target, found by backtracking
// over images in element order.  Results sorted lexicographically by map.
std::vector<std::vector<Elt>> enumerate_homs(const SkewLattice& source,
                                             const SkewLattice& target);

// Backtracking search for a table isomorphism.  Fixes zero to zero and prunes
// candidates by d-class size; returns the first bijection found in
// lexicographic order, or nullopt.
std::optional<std::vector<Elt>> find_isomorphism(const SkewLattice& a, const SkewLattice& b);

}  // namespace skewcat

#endif  // SKEWCAT_HOM_HPP
