#ifndef SKEWCAT_TESTS_UTIL_HPP
#define SKEWCAT_TESTS_UTIL_HPP

#include <initializer_list>
#include <vector>

#include "skewcat/poset.hpp"
#include "skewcat/skew_lattice.hpp"

namespace skewcat::test {

using Rows = std::vector<std::vector<Elt>>;

inline std::vector<Elt> flatten(const Rows& rows) {
  std::vector<Elt> out;
  for (const auto& row : rows) out.insert(out.end(), row.begin(), row.end());
  return out;
}

inline SkewLattice make_algebra(int n, Elt zero, const Rows& meet, const Rows& join) {
  return SkewLattice(n, zero, flatten(meet), flatten(join));
}

// 0 < 1 < ... < m-1.
inline Poset chain(int m) {
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(m) * m, 0);
  for (int x = 0; x < m; ++x)
    for (int y = x; y < m; ++y) leq[static_cast<std::size_t>(x) * m + y] = 1;
  return Poset(m, std::move(leq));
}

inline Poset antichain(int m) {
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(m) * m, 0);
  for (int x = 0; x < m; ++x) leq[static_cast<std::size_t>(x) * m + x] = 1;
  return Poset(m, std::move(leq));
}

// pairs lists x <= y relations beyond reflexivity; closed transitively.
inline Poset poset_from_pairs(int m, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(m) * m, 0);
  for (int x = 0; x < m; ++x) leq[static_cast<std::size_t>(x) * m + x] = 1;
  for (const auto& [x, y] : pairs) leq[static_cast<std::size_t>(x) * m + y] = 1;
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (leq[static_cast<std::size_t>(i) * m + k] && leq[static_cast<std::size_t>(k) * m + j])
          leq[static_cast<std::size_t>(i) * m + j] = 1;
  return Poset(m, std::move(leq));
}

// The four-element Boolean lattice 0 < {1, 2} < 3.
inline SkewLattice boolean4() {
  return make_algebra(4, 0,
                      {{0, 0, 0, 0},
                       {0, 1, 0, 1},
                       {0, 0, 2, 2},
                       {0, 1, 2, 3}},
                      {{0, 1, 2, 3},
                       {1, 1, 3, 3},
                       {2, 3, 2, 3},
                       {3, 3, 3, 3}});
}

// The five-element nondistributive lattice 0 < {1, 2 < 3} < 4 (pentagon).
inline SkewLattice pentagon() {
  return make_algebra(5, 0,
                      {{0, 0, 0, 0, 0},
                       {0, 1, 0, 0, 1},
                       {0, 0, 2, 2, 2},
                       {0, 0, 2, 3, 3},
                       {0, 1, 2, 3, 4}},
                      {{0, 1, 2, 3, 4},
                       {1, 1, 4, 4, 4},
                       {2, 4, 2, 3, 4},
                       {3, 4, 3, 3, 4},
                       {4, 4, 4, 4, 4}});
}

// The five-element nondistributive lattice 0 < {1, 2, 3} < 4 (diamond).
inline SkewLattice diamond() {
  return make_algebra(5, 0,
                      {{0, 0, 0, 0, 0},
                       {0, 1, 0, 0, 1},
                       {0, 0, 2, 0, 2},
                       {0, 0, 0, 3, 3},
                       {0, 1, 2, 3, 4}},
                      {{0, 1, 2, 3, 4},
                       {1, 1, 4, 4, 4},
                       {2, 4, 2, 4, 4},
                       {3, 4, 4, 3, 4},
                       {4, 4, 4, 4, 4}});
}

}  // namespace skewcat::test

#endif  // SKEWCAT_TESTS_UTIL_HPP
