#include "skewcat/congruence.hpp"

#include <algorithm>
#include <string>

namespace skewcat {

Congruence Congruence::from_class_of(const std::vector<int>& raw) {
  const int n = static_cast<int>(raw.size());
  Congruence c;
  c.class_of.assign(n, -1);
  // raw labels are arbitrary ints in 0..n-1; renumber by first occurrence so
  // the class containing the smallest element gets the smallest id
  int next = 0;
  std::vector<int> first(n, -1);
  for (int x = 0; x < n; ++x) {
    int lbl = raw[x];
    if (lbl < 0 || lbl >= n) throw InvalidInput("class label out of range");
    if (first[lbl] == -1) first[lbl] = next++;
    c.class_of[x] = first[lbl];
  }
  c.blocks.assign(next, {});
  for (int x = 0; x < n; ++x) c.blocks[c.class_of[x]].push_back(x);
  return c;
}

Congruence Congruence::identity(int n) {
  std::vector<int> raw(n);
  for (int i = 0; i < n; ++i) raw[i] = i;
  return from_class_of(raw);
}

std::optional<Witness> congruence_violation(const SkewLattice& s, const Congruence& c) {
  const int n = s.size();
  if (c.size() != n) throw InvalidInput("partition size mismatch");
  for (Elt x = 0; x < n; ++x)
    for (Elt x2 = x + 1; x2 < n; ++x2) {
      if (c.class_of[x] != c.class_of[x2]) continue;
      for (Elt y = 0; y < n; ++y) {
        if (c.class_of[s.meet(x, y)] != c.class_of[s.meet(x2, y)]) return Witness{x, x2, y};
        if (c.class_of[s.meet(y, x)] != c.class_of[s.meet(y, x2)]) return Witness{x, x2, y};
        if (c.class_of[s.join(x, y)] != c.class_of[s.join(x2, y)]) return Witness{x, x2, y};
        if (c.class_of[s.join(y, x)] != c.class_of[s.join(y, x2)]) return Witness{x, x2, y};
      }
    }
  return std::nullopt;
}

bool is_congruence(const SkewLattice& s, const Congruence& c) {
  return !congruence_violation(s, c);
}

namespace {

Congruence relation_from_pairs(const SkewLattice& s, bool (*related)(const SkewLattice&, Elt, Elt),
                               const char* name) {
  const int n = s.size();
  std::vector<int> raw(n, -1);
  int next = 0;
  for (Elt x = 0; x < n; ++x) {
    if (raw[x] != -1) continue;
    raw[x] = next;
    for (Elt y = x + 1; y < n; ++y) {
      if (raw[y] == -1 && related(s, x, y)) raw[y] = next;
    }
    ++next;
  }
  // the pairwise relation must already be transitive for the greedy sweep to
  // be sound; verify it, then verify compatibility
  Congruence c = Congruence::from_class_of(raw);
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y)
      internal_check(related(s, x, y) == (c.class_of[x] == c.class_of[y]),
                     std::string(name) + " relation is not an equivalence");
  internal_check(is_congruence(s, c), std::string(name) + " relation is not a congruence");
  return c;
}

bool d_related(const SkewLattice& s, Elt x, Elt y) {
  return s.meet(s.meet(x, y), x) == x && s.meet(s.meet(y, x), y) == y;
}
bool l_related(const SkewLattice& s, Elt x, Elt y) {
  return s.meet(x, y) == x && s.meet(y, x) == y;
}
bool r_related(const SkewLattice& s, Elt x, Elt y) {
  return s.meet(x, y) == y && s.meet(y, x) == x;
}

}  // namespace

Congruence d_relation(const SkewLattice& s) { return relation_from_pairs(s, d_related, "d"); }
Congruence l_relation(const SkewLattice& s) { return relation_from_pairs(s, l_related, "l"); }
Congruence r_relation(const SkewLattice& s) { return relation_from_pairs(s, r_related, "r"); }

Quotient quotient(const SkewLattice& s, const Congruence& c) {
  if (auto w = congruence_violation(s, c)) {
    throw NotACongruence("partition incompatible at (" + std::to_string((*w)[0]) + "," +
                         std::to_string((*w)[1]) + "," + std::to_string((*w)[2]) + ")");
  }
  const int k = c.num_classes();
  std::vector<Elt> meet(static_cast<size_t>(k) * k), join(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      meet[static_cast<size_t>(i) * k + j] = c.class_of[s.meet(c.rep(i), c.rep(j))];
      join[static_cast<size_t>(i) * k + j] = c.class_of[s.join(c.rep(i), c.rep(j))];
    }
  SkewLattice q(k, c.class_of[s.zero()], std::move(meet), std::move(join));
  SkewHom proj{s, q, std::vector<Elt>(c.class_of.begin(), c.class_of.end())};
  return Quotient{std::move(q), std::move(proj)};
}

Quotient reflection(const SkewLattice& s) {
  Quotient q = quotient(s, d_relation(s));
  internal_check(is_lattice(q.algebra), "reflection is not commutative");
  return q;
}

SkewHom lift_through_reflection(const SkewHom& h) {
  if (!is_lattice(h.target)) throw PreconditionUnmet("lift target must be a lattice");
  Congruence d = d_relation(h.source);
  Quotient refl = quotient(h.source, d);
  std::vector<Elt> map(d.num_classes());
  for (int cls = 0; cls < d.num_classes(); ++cls) {
    map[cls] = h.map[d.rep(cls)];
    for (Elt x : d.blocks[cls])
      internal_check(h.map[x] == map[cls], "homomorphism into a lattice not constant on d-classes");
  }
  SkewHom lifted{refl.algebra, h.target, std::move(map)};
  internal_check(is_homomorphism(lifted.map, lifted.source, lifted.target),
                 "lifted map is not a homomorphism");
  return lifted;
}

namespace {

Elt top_of_lattice(const SkewLattice& lattice) {
  Elt t = lattice.zero();
  for (Elt x = 0; x < lattice.size(); ++x) t = lattice.join(t, x);
  return t;
}

}  // namespace

bool is_proper(const SkewHom& h) {
  if (!is_homomorphism(h.map, h.source, h.target))
    throw PreconditionUnmet("is_proper: map is not a homomorphism");
  Quotient sr = reflection(h.source);
  Quotient tr = reflection(h.target);
  std::vector<Elt> hbar(sr.algebra.size(), -1);
  for (Elt x = 0; x < h.source.size(); ++x) {
    int cls = sr.projection.map[x];
    Elt v = tr.projection.map[h.map[x]];
    if (hbar[cls] == -1)
      hbar[cls] = v;
    else
      internal_check(hbar[cls] == v, "induced reflection map not constant on d-classes");
  }
  bool proper = true;
  for (Elt y = 0; y < tr.algebra.size() && proper; ++y) {
    bool covered = false;
    for (Elt x = 0; x < sr.algebra.size() && !covered; ++x)
      covered = tr.algebra.leq(y, hbar[x]);
    proper = covered;
  }
  bool top_preserved = hbar[top_of_lattice(sr.algebra)] == top_of_lattice(tr.algebra);
  internal_check(proper == top_preserved, "properness differs from top preservation");
  return proper;
}

std::vector<Elt> join_irreducibles(const SkewLattice& lattice) {
  if (!is_lattice(lattice)) throw PreconditionUnmet("join_irreducibles needs a lattice");
  std::vector<Elt> out;
  for (Elt j = 0; j < lattice.size(); ++j) {
    if (j == lattice.zero()) continue;
    Elt below = lattice.zero();
    for (Elt x = 0; x < lattice.size(); ++x)
      if (x != j && lattice.leq(x, j)) below = lattice.join(below, x);
    if (below != j) out.push_back(j);
  }
  return out;
}

std::vector<SkewHom> enumerate_proper_homs_to_2(const SkewLattice& s) {
  if (auto w = strongly_distributive_violation(s))
    throw PreconditionUnmet("enumerate_proper_homs_to_2 needs a strongly distributive algebra");
  const SkewLattice t = two();
  Quotient refl = reflection(s);
  std::vector<std::vector<Elt>> maps;
  for (Elt j : join_irreducibles(refl.algebra)) {
    std::vector<Elt> map(s.size());
    for (Elt x = 0; x < s.size(); ++x)
      map[x] = refl.algebra.leq(j, refl.projection.map[x]) ? 1 : 0;
    maps.push_back(std::move(map));
  }
  std::sort(maps.begin(), maps.end());

  if (s.size() <= 12) {
    // brute-force cross-check: scan every candidate indicator map
    std::vector<std::vector<Elt>> brute;
    const int n = s.size();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<Elt> map(n);
      bool nonzero = false;
      for (Elt x = 0; x < n; ++x) {
        map[x] = (mask >> x) & 1u;
        nonzero |= map[x] == 1;
      }
      if (!nonzero) continue;
      if (is_homomorphism(map, s, t)) brute.push_back(std::move(map));
    }
    std::sort(brute.begin(), brute.end());
    internal_check(brute == maps, "proper hom enumeration differs from brute force");
  }

  std::vector<SkewHom> out;
  out.reserve(maps.size());
  for (auto& m : maps) out.push_back(SkewHom{s, t, std::move(m)});
  return out;
}

}  // namespace skewcat
