#ifndef SKEWCAT_SKEW_LATTICE_HPP
#define SKEWCAT_SKEW_LATTICE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "skewcat/errors.hpp"

namespace skewcat {

using Elt = int;

// Size cap for table-building operations.  The global default is 512,
// overridable through the SKEWCAT_MAX_SIZE environment variable or the CLI
// --max-size flag.
struct Limits {
  int max_size = 512;
};

Limits& global_limits();

// A finite algebra (S, meet, join, 0) presented by total operation tables.
// Elements are dense indices 0..size-1.  Construction checks shape and entry
// ranges only; validate() checks the equational laws.
//
// The natural partial order is x <= y iff x meet y == x == y meet x; the
// distinguished zero is its minimum once the laws hold.
class SkewLattice {
 public:
  SkewLattice(int size, Elt zero, std::vector<Elt> meet, std::vector<Elt> join);

  int size() const { return n_; }
  Elt zero() const { return zero_; }
  Elt meet(Elt x, Elt y) const { return meet_[static_cast<size_t>(x) * n_ + y]; }
  Elt join(Elt x, Elt y) const { return join_[static_cast<size_t>(x) * n_ + y]; }
  bool leq(Elt x, Elt y) const { return meet(x, y) == x && meet(y, x) == x; }

  const std::vector<Elt>& meet_table() const { return meet_; }
  const std::vector<Elt>& join_table() const { return join_; }

  bool operator==(const SkewLattice&) const = default;

 private:
  int n_;
  Elt zero_;
  std::vector<Elt> meet_, join_;
};

enum class Law {
  NotAssociative,
  NotIdempotent,
  AbsorptionFails,
  ZeroLawFails,
  NotCommutative,
  NotDistributive,
};

const char* law_name(Law law);

// First violated law found by a validation scan, with the witnessing elements.
// `op` is '^' for meet and 'v' for join.
struct LawViolation {
  Law law;
  char op;
  Elt x = 0, y = 0, z = 0;

  std::string describe() const;
  bool operator==(const LawViolation&) const = default;
};

// Scans idempotency, the zero laws, absorption and associativity, in that
// order, and reports the first failure.  Throws SizeOverflow above the cap.
std::optional<LawViolation> validate(const SkewLattice& s,
                                     const Limits& limits = global_limits());

bool natural_order(const SkewLattice& s, Elt x, Elt y);

using Witness = std::array<Elt, 3>;

// x^y^x == x^y
std::optional<Witness> left_handed_violation(const SkewLattice& s);
// x^y^x == y^x
std::optional<Witness> right_handed_violation(const SkewLattice& s);
// x^(y v z) == (x^y) v (x^z) and (y v z)^x == (y^x) v (z^x)
std::optional<Witness> strongly_distributive_violation(const SkewLattice& s);
// every x^S^x is a commutative sublattice
std::optional<Witness> normal_violation(const SkewLattice& s);
// x v y == y v x iff x^y == y^x
std::optional<Witness> symmetric_violation(const SkewLattice& s);

bool is_left_handed(const SkewLattice& s);
bool is_right_handed(const SkewLattice& s);
bool is_strongly_distributive(const SkewLattice& s);
bool is_normal(const SkewLattice& s);
bool is_symmetric(const SkewLattice& s);

// Both operation tables commutative.
bool is_lattice(const SkewLattice& s);

// For a left-handed strongly distributive algebra, checks that
//   (i)  b^a^a' == b^a'^a for all a, a', b, and
//   (ii) a <= b, a' <= b and a,a' in the same d-class imply a == a'.
// Throws PreconditionUnmet when the algebra is not left-handed strongly
// distributive.  On failure the witness holds (a, a', b).
std::optional<Witness> useful_lemma_violation(const SkewLattice& s);
bool check_useful_lemma(const SkewLattice& s);

// One-element algebra {0}.
SkewLattice one();
// Two-element lattice 0 < 1.
SkewLattice two();
// Same carrier with both operations argument-flipped; swaps handedness.
SkewLattice mirror(const SkewLattice& s);

}  // namespace skewcat

#endif  // SKEWCAT_SKEW_LATTICE_HPP
