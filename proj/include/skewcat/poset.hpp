#ifndef SKEWCAT_POSET_HPP
#define SKEWCAT_POSET_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "skewcat/skew_lattice.hpp"

namespace skewcat {

// Point sets of a poset as bitmasks; bit x is point x.
using PointSet = std::uint32_t;

// A finite poset on points 0..points-1 given by its full order matrix.
// Construction verifies reflexivity, antisymmetry and transitivity.
class Poset {
 public:
  Poset() : m_(0) {}  // the empty poset
  Poset(int points, std::vector<std::uint8_t> leq);

  int points() const { return m_; }
  bool leq(int x, int y) const { return leq_[static_cast<size_t>(x) * m_ + y] != 0; }
  const std::vector<std::uint8_t>& leq_matrix() const { return leq_; }

  bool operator==(const Poset&) const = default;

 private:
  int m_;
  std::vector<std::uint8_t> leq_;
};

bool is_downset(const Poset& p, PointSet u);

// All downsets in ascending mask order.  Throws SizeOverflow when 2^points
// would exceed the cap.
std::vector<PointSet> downsets_of(const Poset& p, const Limits& limits = global_limits());

PointSet principal_downset(const Poset& p, int x);

bool is_monotone(const Poset& x, const Poset& y, const std::vector<int>& f);

// All monotone maps x -> y in lexicographic order.
std::vector<std::vector<int>> monotone_maps(const Poset& x, const Poset& y);

// Adjoins a new greatest point with index points().
Poset add_top(const Poset& p);

// Covering pairs (x, y): x < y with nothing strictly between.
std::vector<std::pair<int, int>> hasse_edges(const Poset& p);

// Every labeled poset on m points, enumerated by choosing one of
// {incomparable, below, above} per unordered pair and keeping transitive
// outcomes.
std::vector<Poset> all_posets(int m);

std::optional<std::vector<int>> find_poset_isomorphism(const Poset& a, const Poset& b);

}  // namespace skewcat

#endif  // SKEWCAT_POSET_HPP
