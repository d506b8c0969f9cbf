#ifndef SKEWCAT_CONSTRUCTIONS_HPP
#define SKEWCAT_CONSTRUCTIONS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "skewcat/bundle.hpp"
#include "skewcat/hom.hpp"
#include "skewcat/poset.hpp"
#include "skewcat/skew_lattice.hpp"

namespace skewcat {

// Primitive algebras: a zero below a single class of t_size pairwise
// incomparable elements 1..t_size.  Left: t ^ t' = t, t v t' = t'.  Right is
// the mirror.
SkewLattice primitive_left(int t_size);
SkewLattice primitive_right(int t_size);

// All partial functions from an x_size-point set to a y_size-letter alphabet.
// Element ids encode the digit vector (0 = undefined at that point, e+1 =
// letter e) little-endian in base y_size+1, so the empty function is 0.
// Meet is restriction to the common domain (first argument's values), join is
// override (second argument wins).
SkewLattice partial_function_algebra(int x_size, int y_size,
                                     const Limits& limits = global_limits());

// Closure of gens plus zero under meet and join, with the inclusion
// homomorphism.  elements lists the closure in ascending ambient order;
// throws SizeOverflow past max_closure.
struct GeneratedSubalgebra {
  SkewLattice algebra;
  SkewHom inclusion;
  std::vector<Elt> elements;
};

GeneratedSubalgebra generated_subalgebra(const SkewLattice& a, std::vector<Elt> gens,
                                         int max_closure);

// Componentwise product; element ids are x * b.size() + y.
SkewLattice direct_product(const SkewLattice& a, const SkewLattice& b);

// Fiber product of two algebras whose lattice reflections are the 2-element
// lattice: pairs whose reflections agree, under componentwise operations.
// Throws PreconditionUnmet when a reflection is not isomorphic to 2.
struct FiberProduct {
  SkewLattice algebra;
  std::vector<std::pair<Elt, Elt>> pairs;
};

FiberProduct fiber_product_over_two(const SkewLattice& a, const SkewLattice& b);

// Verifies the canonical map from s to the fiber product of its maximal
// left- and right-handed images over the lattice reflection: s/R must be
// left-handed, s/L right-handed, and the map a bijective homomorphism.
bool check_second_decomposition(const SkewLattice& s);

// Deterministic splittable generator (splitmix64 steps).  split(stream)
// derives an independent child stream from the original seed.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : seed_(seed), state_(seed) {}

  uint64_t next();
  // Uniform-enough value in [0, bound); bound must be positive.
  uint64_t below(uint64_t bound);
  SplitMix64 split(uint64_t stream) const;

 private:
  uint64_t seed_;
  uint64_t state_;
};

struct GeneratorConfig {
  uint64_t seed = 0;
  int max_base_points = 3;
  int max_stalk = 2;
  int max_generators = 4;
  int max_closure_size = 40;
};

void validate_generator_config(const GeneratorConfig& cfg);

// Random downward-oriented relation on index pairs, transitively closed.
Poset random_poset(SplitMix64& rng, int max_points);

Bundle random_bundle(SplitMix64& rng, const GeneratorConfig& cfg);

// A random generated subalgebra of the section algebra of a random bundle.
// Always validates as left-handed strongly distributive; re-checked before
// returning.
SkewLattice random_lhsd_algebra(const GeneratorConfig& cfg);

// Injective homomorphism into a partial-function algebra over the dual base,
// with the stalks packed into one alphabet.
struct Embedding {
  SkewLattice target;
  SkewHom hom;
};

Embedding embed_into_partial_functions(const SkewLattice& s,
                                       const Limits& limits = global_limits());

}  // namespace skewcat

#endif  // SKEWCAT_CONSTRUCTIONS_HPP
