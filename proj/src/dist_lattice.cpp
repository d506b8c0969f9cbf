#include "skewcat/dist_lattice.hpp"

#include <algorithm>

#include "skewcat/errors.hpp"

namespace skewcat {

DistLattice::DistLattice(SkewLattice alg) : alg_(std::move(alg)), top_(alg_.zero()) {
  const int n = alg_.size();
  for (Elt x = 0; x < n; ++x) {
    for (Elt y = 0; y < n; ++y) {
      if (alg_.meet(x, y) != alg_.meet(y, x) || alg_.join(x, y) != alg_.join(y, x)) {
        throw InvalidInput("DistLattice requires commutative operations");
      }
    }
  }
  for (Elt x = 0; x < n; ++x) top_ = alg_.join(top_, x);
  for (Elt x = 0; x < n; ++x) {
    if (alg_.meet(x, top_) != x) {
      throw InvalidInput("DistLattice: fold of joins is not a greatest element");
    }
  }
}

std::optional<LawViolation> validate_dist_lattice(const SkewLattice& s, const Limits& limits) {
  if (auto v = validate(s, limits)) return v;
  const int n = s.size();
  for (Elt x = 0; x < n; ++x) {
    for (Elt y = 0; y < n; ++y) {
      if (s.meet(x, y) != s.meet(y, x)) return LawViolation{Law::NotCommutative, '^', x, y, 0};
      if (s.join(x, y) != s.join(y, x)) return LawViolation{Law::NotCommutative, 'v', x, y, 0};
    }
  }
  for (Elt x = 0; x < n; ++x) {
    for (Elt y = 0; y < n; ++y) {
      for (Elt z = 0; z < n; ++z) {
        if (s.meet(x, s.join(y, z)) != s.join(s.meet(x, y), s.meet(x, z))) {
          return LawViolation{Law::NotDistributive, '^', x, y, z};
        }
        if (s.join(x, s.meet(y, z)) != s.meet(s.join(x, y), s.join(x, z))) {
          return LawViolation{Law::NotDistributive, 'v', x, y, z};
        }
      }
    }
  }
  return std::nullopt;
}

DistReflection distributive_reflection(const SkewLattice& s) {
  Quotient refl = reflection(s);
  if (auto v = validate_dist_lattice(refl.algebra)) {
    if (v->law == Law::NotDistributive) {
      throw NotDistributiveReflection("lattice reflection is not distributive: " + v->describe());
    }
    throw InternalCompatibilityViolation("lattice reflection violates a lattice law: " +
                                         v->describe());
  }
  return DistReflection{DistLattice(refl.algebra), refl.projection};
}

namespace {

// Brute-force prime filters for the spectrum cross-check: nonempty proper
// subsets that are upward closed, meet-closed, and whose complement is closed
// under join.
std::vector<std::vector<Elt>> brute_force_prime_filters(const DistLattice& d) {
  const int n = d.size();
  std::vector<std::vector<Elt>> out;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (mask & (1u << d.zero())) continue;  // proper
    bool ok = (mask >> d.top()) & 1u;       // nonempty upward-closed set has the top
    for (Elt a = 0; ok && a < n; ++a) {
      if (!((mask >> a) & 1u)) continue;
      for (Elt b = 0; ok && b < n; ++b) {
        if (d.leq(a, b) && !((mask >> b) & 1u)) ok = false;              // upward closed
        if (((mask >> b) & 1u) && !((mask >> d.meet(a, b)) & 1u)) ok = false;  // meet closed
      }
    }
    for (Elt a = 0; ok && a < n; ++a) {
      for (Elt b = 0; ok && b < n; ++b) {
        if (!((mask >> a) & 1u) && !((mask >> b) & 1u) && ((mask >> d.join(a, b)) & 1u)) {
          ok = false;  // prime: a v b in F forces a in F or b in F
        }
      }
    }
    if (!ok) continue;
    std::vector<Elt> filter;
    for (Elt a = 0; a < n; ++a) {
      if ((mask >> a) & 1u) filter.push_back(a);
    }
    out.push_back(std::move(filter));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SpectrumResult spectrum(const DistLattice& d) {
  std::vector<Elt> gens = join_irreducibles(d.alg());
  const int m = static_cast<int>(gens.size());
  std::vector<std::vector<Elt>> filters(m);
  for (int p = 0; p < m; ++p) {
    for (Elt a = 0; a < d.size(); ++a) {
      if (d.leq(gens[p], a)) filters[p].push_back(a);
    }
  }
  // Reverse filter inclusion: p <= q iff filter_p contains filter_q, which for
  // principal upsets means gens[p] <= gens[q] in the lattice.
  std::vector<uint8_t> leq(static_cast<size_t>(m) * m, 0);
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      leq[static_cast<size_t>(p) * m + q] = d.leq(gens[p], gens[q]) ? 1 : 0;
    }
  }
  SpectrumResult result{Poset(m, std::move(leq)), std::move(filters), std::move(gens)};
  if (d.size() <= 16) {
    std::vector<std::vector<Elt>> sorted = result.filters;
    std::sort(sorted.begin(), sorted.end());
    internal_check(sorted == brute_force_prime_filters(d),
                   "spectrum disagrees with brute-force prime filter enumeration");
  }
  return result;
}

int DownsetLattice::index_of(PointSet mask) const {
  auto it = std::lower_bound(downsets.begin(), downsets.end(), mask);
  if (it == downsets.end() || *it != mask) {
    throw InvalidInput("index_of: mask is not a downset of the base poset");
  }
  return static_cast<int>(it - downsets.begin());
}

DownsetLattice downset_lattice(const Poset& p, const Limits& limits) {
  std::vector<PointSet> downs = downsets_of(p, limits);
  const int n = static_cast<int>(downs.size());
  if (n > limits.max_size) {
    throw SizeOverflow("downset lattice has " + std::to_string(n) + " elements, cap is " +
                       std::to_string(limits.max_size));
  }
  auto index = [&](PointSet mask) {
    return static_cast<Elt>(std::lower_bound(downs.begin(), downs.end(), mask) - downs.begin());
  };
  std::vector<Elt> meet(static_cast<size_t>(n) * n), join(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      meet[static_cast<size_t>(i) * n + j] = index(downs[i] & downs[j]);
      join[static_cast<size_t>(i) * n + j] = index(downs[i] | downs[j]);
    }
  }
  SkewLattice alg(n, /*zero=*/0, std::move(meet), std::move(join));
  return DownsetLattice{DistLattice(std::move(alg)), std::move(downs)};
}

UnitLattice unit_lattice(const DistLattice& d) {
  SpectrumResult sp = spectrum(d);
  DownsetLattice dd = downset_lattice(sp.poset);
  const int m = sp.poset.points();
  std::vector<Elt> map(d.size());
  for (Elt a = 0; a < d.size(); ++a) {
    PointSet hat = 0;
    for (int p = 0; p < m; ++p) {
      if (d.leq(sp.generators[p], a)) hat |= PointSet{1} << p;
    }
    map[a] = dd.index_of(hat);
  }
  internal_check(is_homomorphism(map, d.alg(), dd.lattice.alg()),
                 "lattice unit is not a homomorphism");
  std::vector<uint8_t> hit(map.size(), 0);
  for (Elt a = 0; a < d.size(); ++a) hit[map[a]] = 1;
  internal_check(d.size() == dd.lattice.size() &&
                     std::all_of(hit.begin(), hit.end(), [](uint8_t b) { return b == 1; }),
                 "lattice unit is not bijective");
  return UnitLattice{std::move(sp), std::move(dd), std::move(map)};
}

UnitPoset unit_poset(const Poset& p, const Limits& limits) {
  DownsetLattice dual = downset_lattice(p, limits);
  SpectrumResult dd = spectrum(dual.lattice);
  const int m = p.points();
  // The prime filter of all downsets containing x is the principal upset of
  // the smallest such downset, so x is sent to the spectrum point generated by
  // the principal downset of x.
  std::vector<int> map(m, -1);
  for (int x = 0; x < m; ++x) {
    Elt gen = dual.index_of(principal_downset(p, x));
    for (int q = 0; q < dd.poset.points(); ++q) {
      if (dd.generators[q] == gen) {
        map[x] = q;
        break;
      }
    }
    internal_check(map[x] >= 0, "principal downset is not join-irreducible");
  }
  internal_check(m == dd.poset.points(), "poset unit is not bijective");
  std::vector<uint8_t> hit(static_cast<size_t>(std::max(m, 1)), 0);
  for (int x = 0; x < m; ++x) hit[map[x]] = 1;
  for (int x = 0; x < m; ++x) {
    internal_check(hit[x] == 1, "poset unit is not bijective");
    for (int y = 0; y < m; ++y) {
      internal_check(p.leq(x, y) == dd.poset.leq(map[x], map[y]),
                     "poset unit does not preserve and reflect order");
    }
  }
  return UnitPoset{std::move(dual), std::move(dd), std::move(map)};
}

SkewHom dual_of_monotone(const Poset& x, const Poset& y, const std::vector<int>& f,
                         const Limits& limits) {
  if (static_cast<int>(f.size()) != x.points()) {
    throw InvalidInput("dual_of_monotone: map has wrong length");
  }
  for (int v : f) {
    if (v < 0 || v >= y.points()) throw InvalidInput("dual_of_monotone: value out of range");
  }
  if (!is_monotone(x, y, f)) throw NotMonotone("dual_of_monotone requires a monotone map");
  DownsetLattice dx = downset_lattice(x, limits);
  DownsetLattice dy = downset_lattice(y, limits);
  std::vector<Elt> map(dy.downsets.size());
  for (size_t u = 0; u < dy.downsets.size(); ++u) {
    PointSet preimage = 0;
    for (int i = 0; i < x.points(); ++i) {
      if ((dy.downsets[u] >> f[i]) & 1u) preimage |= PointSet{1} << i;
    }
    map[u] = dx.index_of(preimage);
  }
  SkewHom h{dy.lattice.alg(), dx.lattice.alg(), std::move(map)};
  internal_check(is_homomorphism(h.map, h.source, h.target),
                 "inverse image along a monotone map is not a homomorphism");
  internal_check(is_proper(h), "inverse image along a monotone map is not proper");
  return h;
}

DualOfHom dual_of_proper_hom(const SkewHom& k) {
  if (auto v = validate_dist_lattice(k.source)) {
    throw PreconditionUnmet("dual_of_proper_hom: source is not a distributive lattice: " +
                            v->describe());
  }
  if (auto v = validate_dist_lattice(k.target)) {
    throw PreconditionUnmet("dual_of_proper_hom: target is not a distributive lattice: " +
                            v->describe());
  }
  if (!is_homomorphism(k.map, k.source, k.target)) {
    throw PreconditionUnmet("dual_of_proper_hom: map is not a homomorphism");
  }
  if (!is_proper(k)) throw NotProper("dual_of_proper_hom requires a proper homomorphism");
  DistLattice d(k.source), e(k.target);
  SpectrumResult spec_e = spectrum(e);
  SpectrumResult spec_d = spectrum(d);
  std::vector<int> map(spec_e.poset.points(), -1);
  for (int q = 0; q < spec_e.poset.points(); ++q) {
    std::vector<Elt> pulled;
    for (Elt a = 0; a < d.size(); ++a) {
      if (std::binary_search(spec_e.filters[q].begin(), spec_e.filters[q].end(), k(a))) {
        pulled.push_back(a);
      }
    }
    for (int p = 0; p < spec_d.poset.points(); ++p) {
      if (spec_d.filters[p] == pulled) {
        map[q] = p;
        break;
      }
    }
    internal_check(map[q] >= 0, "inverse image of a prime filter is not a prime filter");
  }
  internal_check(is_monotone(spec_e.poset, spec_d.poset, map),
                 "dual of a proper homomorphism is not monotone");
  return DualOfHom{std::move(spec_e), std::move(spec_d), std::move(map)};
}

}  // namespace skewcat
