#include "skewcat/skew_lattice.hpp"

#include <cstdlib>
#include <vector>

namespace skewcat {

Limits& global_limits() {
  static Limits limits = [] {
    Limits l;
    if (const char* env = std::getenv("SKEWCAT_MAX_SIZE")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != nullptr && *end == '\0' && v > 0) l.max_size = static_cast<int>(v);
    }
    return l;
  }();
  return limits;
}

SkewLattice::SkewLattice(int size, Elt zero, std::vector<Elt> meet, std::vector<Elt> join)
    : n_(size), zero_(zero), meet_(std::move(meet)), join_(std::move(join)) {
  if (n_ <= 0) throw InvalidInput("algebra size must be positive");
  if (zero_ < 0 || zero_ >= n_) throw InvalidInput("zero index out of range");
  const size_t cells = static_cast<size_t>(n_) * n_;
  if (meet_.size() != cells) throw InvalidInput("meet table has wrong shape");
  if (join_.size() != cells) throw InvalidInput("join table has wrong shape");
  for (size_t i = 0; i < cells; ++i) {
    if (meet_[i] < 0 || meet_[i] >= n_) throw InvalidInput("meet table entry out of range");
    if (join_[i] < 0 || join_[i] >= n_) throw InvalidInput("join table entry out of range");
  }
}

const char* law_name(Law law) {
  switch (law) {
    case Law::NotAssociative: return "NotAssociative";
    case Law::NotIdempotent: return "NotIdempotent";
    case Law::AbsorptionFails: return "AbsorptionFails";
    case Law::ZeroLawFails: return "ZeroLawFails";
    case Law::NotCommutative: return "NotCommutative";
    case Law::NotDistributive: return "NotDistributive";
  }
  return "?";
}

std::string LawViolation::describe() const {
  const char* opname = (op == '^') ? "meet" : "join";
  std::string at = "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
  return std::string(law_name(law)) + " for " + opname + " at " + at;
}

std::optional<LawViolation> validate(const SkewLattice& s, const Limits& limits) {
  const int n = s.size();
  if (n > limits.max_size)
    throw SizeOverflow("algebra size " + std::to_string(n) + " exceeds cap " +
                       std::to_string(limits.max_size));
  for (Elt x = 0; x < n; ++x) {
    if (s.meet(x, x) != x) return LawViolation{Law::NotIdempotent, '^', x, x, x};
    if (s.join(x, x) != x) return LawViolation{Law::NotIdempotent, 'v', x, x, x};
  }
  const Elt z = s.zero();
  for (Elt x = 0; x < n; ++x) {
    if (s.meet(x, z) != z || s.meet(z, x) != z)
      return LawViolation{Law::ZeroLawFails, '^', x, z, z};
  }
  for (Elt x = 0; x < n; ++x) {
    for (Elt y = 0; y < n; ++y) {
      if (s.meet(x, s.join(x, y)) != x) return LawViolation{Law::AbsorptionFails, '^', x, y, y};
      if (s.join(x, s.meet(x, y)) != x) return LawViolation{Law::AbsorptionFails, 'v', x, y, y};
      if (s.meet(s.join(y, x), x) != x) return LawViolation{Law::AbsorptionFails, '^', y, x, x};
      if (s.join(s.meet(y, x), x) != x) return LawViolation{Law::AbsorptionFails, 'v', y, x, x};
    }
  }
  for (Elt x = 0; x < n; ++x) {
    for (Elt y = 0; y < n; ++y) {
      for (Elt w = 0; w < n; ++w) {
        if (s.meet(s.meet(x, y), w) != s.meet(x, s.meet(y, w)))
          return LawViolation{Law::NotAssociative, '^', x, y, w};
        if (s.join(s.join(x, y), w) != s.join(x, s.join(y, w)))
          return LawViolation{Law::NotAssociative, 'v', x, y, w};
      }
    }
  }
  return std::nullopt;
}

bool natural_order(const SkewLattice& s, Elt x, Elt y) { return s.leq(x, y); }

std::optional<Witness> left_handed_violation(const SkewLattice& s) {
  const int n = s.size();
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y)
      if (s.meet(s.meet(x, y), x) != s.meet(x, y)) return Witness{x, y, y};
  return std::nullopt;
}

std::optional<Witness> right_handed_violation(const SkewLattice& s) {
  const int n = s.size();
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y)
      if (s.meet(s.meet(x, y), x) != s.meet(y, x)) return Witness{x, y, y};
  return std::nullopt;
}

std::optional<Witness> strongly_distributive_violation(const SkewLattice& s) {
  const int n = s.size();
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y)
      for (Elt w = 0; w < n; ++w) {
        if (s.meet(x, s.join(y, w)) != s.join(s.meet(x, y), s.meet(x, w))) return Witness{x, y, w};
        if (s.meet(s.join(y, w), x) != s.join(s.meet(y, x), s.meet(w, x))) return Witness{x, y, w};
      }
  return std::nullopt;
}

std::optional<Witness> normal_violation(const SkewLattice& s) {
  const int n = s.size();
  std::vector<char> in_axis(n);
  std::vector<Elt> axis;
  for (Elt x = 0; x < n; ++x) {
    std::fill(in_axis.begin(), in_axis.end(), 0);
    axis.clear();
    for (Elt y = 0; y < n; ++y) {
      Elt e = s.meet(s.meet(x, y), x);
      if (!in_axis[e]) {
        in_axis[e] = 1;
        axis.push_back(e);
      }
    }
    for (Elt a : axis)
      for (Elt b : axis) {
        Elt m = s.meet(a, b), j = s.join(a, b);
        if (m != s.meet(b, a) || j != s.join(b, a)) return Witness{x, a, b};
        if (!in_axis[m] || !in_axis[j]) return Witness{x, a, b};
      }
  }
  return std::nullopt;
}

std::optional<Witness> symmetric_violation(const SkewLattice& s) {
  const int n = s.size();
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y) {
      bool join_comm = s.join(x, y) == s.join(y, x);
      bool meet_comm = s.meet(x, y) == s.meet(y, x);
      if (join_comm != meet_comm) return Witness{x, y, y};
    }
  return std::nullopt;
}

bool is_left_handed(const SkewLattice& s) { return !left_handed_violation(s); }
bool is_right_handed(const SkewLattice& s) { return !right_handed_violation(s); }
bool is_strongly_distributive(const SkewLattice& s) { return !strongly_distributive_violation(s); }
bool is_normal(const SkewLattice& s) { return !normal_violation(s); }
bool is_symmetric(const SkewLattice& s) { return !symmetric_violation(s); }

bool is_lattice(const SkewLattice& s) {
  const int n = s.size();
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y)
      if (s.meet(x, y) != s.meet(y, x) || s.join(x, y) != s.join(y, x)) return false;
  return true;
}

std::optional<Witness> useful_lemma_violation(const SkewLattice& s) {
  if (!is_left_handed(s) || !is_strongly_distributive(s))
    throw PreconditionUnmet("algebra must be left-handed and strongly distributive");
  const int n = s.size();
  for (Elt b = 0; b < n; ++b)
    for (Elt a = 0; a < n; ++a)
      for (Elt a2 = 0; a2 < n; ++a2) {
        if (s.meet(s.meet(b, a), a2) != s.meet(s.meet(b, a2), a)) return Witness{a, a2, b};
        // same d-class: a^a2^a == a and a2^a^a2 == a2
        bool dcls = s.meet(s.meet(a, a2), a) == a && s.meet(s.meet(a2, a), a2) == a2;
        if (dcls && s.leq(a, b) && s.leq(a2, b) && a != a2) return Witness{a, a2, b};
      }
  return std::nullopt;
}

bool check_useful_lemma(const SkewLattice& s) { return !useful_lemma_violation(s); }

SkewLattice one() { return SkewLattice(1, 0, {0}, {0}); }

SkewLattice two() { return SkewLattice(2, 0, {0, 0, 0, 1}, {0, 1, 1, 1}); }

SkewLattice mirror(const SkewLattice& s) {
  const int n = s.size();
  std::vector<Elt> meet(static_cast<size_t>(n) * n), join(static_cast<size_t>(n) * n);
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y) {
      meet[static_cast<size_t>(x) * n + y] = s.meet(y, x);
      join[static_cast<size_t>(x) * n + y] = s.join(y, x);
    }
  return SkewLattice(n, s.zero(), std::move(meet), std::move(join));
}

}  // namespace skewcat
