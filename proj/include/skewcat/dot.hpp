#ifndef SKEWCAT_DOT_HPP
#define SKEWCAT_DOT_HPP

#include <string>

#include "skewcat/bundle.hpp"
#include "skewcat/poset.hpp"
#include "skewcat/skew_lattice.hpp"

namespace skewcat {

// Graphviz exports draw only Hasse edges (the transitive reduction), with
// covers pointing upward.
std::string dot_of_poset(const Poset& p);
std::string dot_of_bundle(const Bundle& b);

// Hasse diagram of the natural order x <= y iff x&y = x = y&x.
std::string dot_of_natural_order(const SkewLattice& s);

}  // namespace skewcat

#endif  // SKEWCAT_DOT_HPP
