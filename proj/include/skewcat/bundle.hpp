#ifndef SKEWCAT_BUNDLE_HPP
#define SKEWCAT_BUNDLE_HPP

#include <compare>
#include <vector>

#include "skewcat/poset.hpp"
#include "skewcat/skew_lattice.hpp"

namespace skewcat {

// A finite bundle: a poset of base points, each carrying a nonempty stalk
// whose elements are 0..stalks[x]-1.  In the finite discrete setting no
// topology is stored; any stalk assignment determines the bundle.
struct Bundle {
  Poset base;
  std::vector<int> stalks;

  bool operator==(const Bundle&) const = default;
};

// Throws InvalidInput unless every point has a positive stalk size.
void validate_bundle(const Bundle& b);

// All bundles with exactly 0..max_points base points and stalk sizes in
// 1..max_stalk, ordered by point count, then poset enumeration order, then
// stalk vector lexicographically (last point fastest).
std::vector<Bundle> all_bundles(int max_points, int max_stalk);

// A section assigns a stalk element to every point of a downward closed
// domain; values[x] is -1 outside the domain.  The default ordering (domain
// mask ascending, then values lexicographically) is the canonical element
// order used throughout.
struct Section {
  PointSet domain = 0;
  std::vector<int> values;

  bool operator==(const Section&) const = default;
  auto operator<=>(const Section&) const = default;
};

bool is_valid_section(const Bundle& b, const Section& s);
Section empty_section(const Bundle& b);

// All sections over the downset u in canonical order (values of the last
// domain point vary fastest).  Throws SizeOverflow past the configured cap.
std::vector<Section> sections_over(const Bundle& b, PointSet u,
                                   const Limits& limits = global_limits());

// Restriction to a sub-downset of the domain; throws NotSubdownset otherwise.
Section restrict_section(const Bundle& b, const Section& s, PointSet u);

// Meet: the first argument's values on the intersected domain.
Section meet_sections(const Bundle& b, const Section& s, const Section& t);

// Join (override): the second argument's values on its domain, the first's on
// the rest of the union.
Section join_sections(const Bundle& b, const Section& s, const Section& t);

// The unique section on the union of domains agreeing with every member.
// Throws IncompatibleFamily naming the first disagreement.  The empty family
// patches to the empty section.
Section patch(const Bundle& b, const std::vector<Section>& family);

// A morphism of bundles from (X,E) to (Y,F): a monotone base map f : X -> Y
// together with, for every x, a total map from the stalk of F at f(x) to the
// stalk of E at x.  Sections transport contravariantly (apply_sheaf_morphism).
struct SheafMorphism {
  Bundle source;  // E over X
  Bundle target;  // F over Y
  std::vector<int> base_map;
  std::vector<std::vector<int>> fiber_maps;

  bool operator==(const SheafMorphism&) const = default;
};

// Throws InvalidInput / NotMonotone when the data does not describe a
// morphism from m.source to m.target.
void validate_sheaf_morphism(const SheafMorphism& m);

SheafMorphism identity_sheaf_morphism(const Bundle& b);

// Composition: first apply f (base maps compose covariantly), fiber maps
// compose the other way around.  Throws InvalidInput on a bundle mismatch.
SheafMorphism compose_sheaf_morphisms(const SheafMorphism& m2, const SheafMorphism& m1);

// Transport a section s of the target over V to the section of the source
// over f^{-1}(V) given by x -> fiber_maps[x](s(f(x))).
Section apply_sheaf_morphism(const SheafMorphism& m, const Section& s);

// All morphisms from e to f: every monotone base map paired with every
// fiber-map family, in lexicographic order.
std::vector<SheafMorphism> enumerate_sheaf_morphisms(const Bundle& e, const Bundle& f,
                                                     const Limits& limits = global_limits());

// The direct image of a bundle along a monotone map f : X -> Y, presented as
// an evaluator sending each downset V of Y to the sections over f^{-1}(V).
struct DirectImage {
  Bundle source;
  Poset target;
  std::vector<int> base_map;

  PointSet preimage(PointSet v) const;
  std::vector<Section> sections(PointSet v, const Limits& limits = global_limits()) const;
};

DirectImage direct_image(const Bundle& b, const Poset& y, const std::vector<int>& f);

// Exhaustively checks unique gluing of compatible pairs over every pair of
// downsets of the target.
bool direct_image_satisfies_sheaf_condition(const DirectImage& di,
                                            const Limits& limits = global_limits());

// The natural-transformation form of a sheaf morphism: one component per
// downset V of the target poset, mapping sections of F over V to sections of
// the direct image (that is, sections of E over f^{-1}(V)).  Components are
// index maps between the canonical section lists; naturality of every square
// V' subset of V is verified during construction.
struct NatTransformation {
  DirectImage image;
  std::vector<PointSet> downsets;
  std::vector<std::vector<Section>> target_sections;
  std::vector<std::vector<Section>> image_sections;
  std::vector<std::vector<int>> components;
};

NatTransformation to_natural_transformation(const SheafMorphism& m,
                                            const Limits& limits = global_limits());

}  // namespace skewcat

#endif  // SKEWCAT_BUNDLE_HPP
