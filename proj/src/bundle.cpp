#include "skewcat/bundle.hpp"

#include <algorithm>

#include "skewcat/errors.hpp"

namespace skewcat {

void validate_bundle(const Bundle& b) {
  if (static_cast<int>(b.stalks.size()) != b.base.points()) {
    throw InvalidInput("bundle needs one stalk size per base point");
  }
  for (int k : b.stalks) {
    if (k < 1) throw InvalidInput("bundle stalks must be nonempty");
  }
}

std::vector<Bundle> all_bundles(int max_points, int max_stalk) {
  if (max_points < 0 || max_stalk < 1) throw InvalidInput("all_bundles: bad caps");
  std::vector<Bundle> out;
  for (int m = 0; m <= max_points; ++m) {
    for (const Poset& p : all_posets(m)) {
      std::vector<int> stalks(m, 1);
      while (true) {
        out.push_back(Bundle{p, stalks});
        int k = m - 1;
        while (k >= 0 && stalks[k] == max_stalk) stalks[k--] = 1;
        if (k < 0) break;
        ++stalks[k];
      }
    }
  }
  return out;
}

bool is_valid_section(const Bundle& b, const Section& s) {
  const int m = b.base.points();
  if (static_cast<int>(s.values.size()) != m) return false;
  if (!is_downset(b.base, s.domain)) return false;
  for (int x = 0; x < m; ++x) {
    if ((s.domain >> x) & 1u) {
      if (s.values[x] < 0 || s.values[x] >= b.stalks[x]) return false;
    } else if (s.values[x] != -1) {
      return false;
    }
  }
  return true;
}

Section empty_section(const Bundle& b) {
  return Section{0, std::vector<int>(b.base.points(), -1)};
}

std::vector<Section> sections_over(const Bundle& b, PointSet u, const Limits& limits) {
  validate_bundle(b);
  if (!is_downset(b.base, u)) throw InvalidInput("sections_over: domain is not a downset");
  const int m = b.base.points();
  std::vector<int> pts;
  long long count = 1;
  for (int x = 0; x < m; ++x) {
    if ((u >> x) & 1u) {
      pts.push_back(x);
      count *= b.stalks[x];
      if (count > limits.max_size) {
        throw SizeOverflow("more than " + std::to_string(limits.max_size) +
                           " sections over the requested downset");
      }
    }
  }
  std::vector<Section> out;
  out.reserve(static_cast<size_t>(count));
  std::vector<int> vals(m, -1);
  for (int x : pts) vals[x] = 0;
  while (true) {
    out.push_back(Section{u, vals});
    int k = static_cast<int>(pts.size()) - 1;
    while (k >= 0 && vals[pts[k]] == b.stalks[pts[k]] - 1) vals[pts[k--]] = 0;
    if (k < 0) break;
    ++vals[pts[k]];
  }
  return out;
}

Section restrict_section(const Bundle& b, const Section& s, PointSet u) {
  if (!is_valid_section(b, s)) throw InvalidInput("restrict_section: invalid section");
  if ((u & ~s.domain) != 0 || !is_downset(b.base, u)) {
    throw NotSubdownset("restriction target must be a downset inside the domain");
  }
  Section r = empty_section(b);
  r.domain = u;
  for (int x = 0; x < b.base.points(); ++x) {
    if ((u >> x) & 1u) r.values[x] = s.values[x];
  }
  return r;
}

Section meet_sections(const Bundle& b, const Section& s, const Section& t) {
  if (!is_valid_section(b, s) || !is_valid_section(b, t)) {
    throw InvalidInput("meet_sections: invalid section");
  }
  return restrict_section(b, s, s.domain & t.domain);
}

Section join_sections(const Bundle& b, const Section& s, const Section& t) {
  if (!is_valid_section(b, s) || !is_valid_section(b, t)) {
    throw InvalidInput("join_sections: invalid section");
  }
  Section r = empty_section(b);
  r.domain = s.domain | t.domain;
  for (int x = 0; x < b.base.points(); ++x) {
    if ((t.domain >> x) & 1u) {
      r.values[x] = t.values[x];
    } else if ((s.domain >> x) & 1u) {
      r.values[x] = s.values[x];
    }
  }
  return r;
}

Section patch(const Bundle& b, const std::vector<Section>& family) {
  for (const Section& s : family) {
    if (!is_valid_section(b, s)) throw InvalidInput("patch: invalid section in family");
  }
  for (size_t i = 0; i < family.size(); ++i) {
    for (size_t j = i + 1; j < family.size(); ++j) {
      PointSet overlap = family[i].domain & family[j].domain;
      for (int x = 0; x < b.base.points(); ++x) {
        if (((overlap >> x) & 1u) && family[i].values[x] != family[j].values[x]) {
          throw IncompatibleFamily(static_cast<int>(i), static_cast<int>(j), x);
        }
      }
    }
  }
  Section r = empty_section(b);
  for (const Section& s : family) {
    r.domain |= s.domain;
    for (int x = 0; x < b.base.points(); ++x) {
      if ((s.domain >> x) & 1u) r.values[x] = s.values[x];
    }
  }
  return r;
}

void validate_sheaf_morphism(const SheafMorphism& m) {
  validate_bundle(m.source);
  validate_bundle(m.target);
  const int nx = m.source.base.points();
  if (static_cast<int>(m.base_map.size()) != nx) {
    throw InvalidInput("sheaf morphism base map has wrong length");
  }
  for (int v : m.base_map) {
    if (v < 0 || v >= m.target.base.points()) {
      throw InvalidInput("sheaf morphism base map value out of range");
    }
  }
  if (!is_monotone(m.source.base, m.target.base, m.base_map)) {
    throw NotMonotone("sheaf morphism base map must be monotone");
  }
  if (static_cast<int>(m.fiber_maps.size()) != nx) {
    throw InvalidInput("sheaf morphism needs one fiber map per source point");
  }
  for (int x = 0; x < nx; ++x) {
    if (static_cast<int>(m.fiber_maps[x].size()) != m.target.stalks[m.base_map[x]]) {
      throw InvalidInput("fiber map domain size mismatch");
    }
    for (int e : m.fiber_maps[x]) {
      if (e < 0 || e >= m.source.stalks[x]) throw InvalidInput("fiber map value out of range");
    }
  }
}

SheafMorphism identity_sheaf_morphism(const Bundle& b) {
  validate_bundle(b);
  const int m = b.base.points();
  SheafMorphism id{b, b, std::vector<int>(m), std::vector<std::vector<int>>(m)};
  for (int x = 0; x < m; ++x) {
    id.base_map[x] = x;
    id.fiber_maps[x].resize(b.stalks[x]);
    for (int e = 0; e < b.stalks[x]; ++e) id.fiber_maps[x][e] = e;
  }
  return id;
}

SheafMorphism compose_sheaf_morphisms(const SheafMorphism& m2, const SheafMorphism& m1) {
  validate_sheaf_morphism(m1);
  validate_sheaf_morphism(m2);
  if (!(m1.target == m2.source)) {
    throw InvalidInput("compose_sheaf_morphisms: middle bundles differ");
  }
  const int nx = m1.source.base.points();
  SheafMorphism out{m1.source, m2.target, std::vector<int>(nx),
                    std::vector<std::vector<int>>(nx)};
  for (int x = 0; x < nx; ++x) {
    int y = m1.base_map[x];
    out.base_map[x] = m2.base_map[y];
    const std::vector<int>& inner = m2.fiber_maps[y];  // G_{g(f(x))} -> F_{f(x)}
    out.fiber_maps[x].resize(inner.size());
    for (size_t e = 0; e < inner.size(); ++e) {
      out.fiber_maps[x][e] = m1.fiber_maps[x][inner[e]];
    }
  }
  return out;
}

Section apply_sheaf_morphism(const SheafMorphism& m, const Section& s) {
  if (!is_valid_section(m.target, s)) {
    throw InvalidInput("apply_sheaf_morphism: not a section of the target bundle");
  }
  Section r = empty_section(m.source);
  for (int x = 0; x < m.source.base.points(); ++x) {
    if ((s.domain >> m.base_map[x]) & 1u) {
      r.domain |= PointSet{1} << x;
      r.values[x] = m.fiber_maps[x][s.values[m.base_map[x]]];
    }
  }
  return r;
}

std::vector<SheafMorphism> enumerate_sheaf_morphisms(const Bundle& e, const Bundle& f,
                                                     const Limits& limits) {
  validate_bundle(e);
  validate_bundle(f);
  const int nx = e.base.points();
  std::vector<SheafMorphism> out;
  for (const std::vector<int>& base : monotone_maps(e.base, f.base)) {
    long long per_base = 1;
    for (int x = 0; x < nx; ++x) {
      for (int i = 0; i < f.stalks[base[x]]; ++i) {
        per_base *= e.stalks[x];
        if (per_base + static_cast<long long>(out.size()) > limits.max_size) {
          throw SizeOverflow("more than " + std::to_string(limits.max_size) +
                             " sheaf morphisms");
        }
      }
    }
    std::vector<std::vector<int>> fibers(nx);
    for (int x = 0; x < nx; ++x) fibers[x].assign(f.stalks[base[x]], 0);
    while (true) {
      out.push_back(SheafMorphism{e, f, base, fibers});
      int x = nx - 1;
      int i = -1;
      for (; x >= 0; --x) {
        for (i = static_cast<int>(fibers[x].size()) - 1; i >= 0; --i) {
          if (fibers[x][i] < e.stalks[x] - 1) break;
          fibers[x][i] = 0;
        }
        if (i >= 0) break;
      }
      if (x < 0) break;
      ++fibers[x][i];
    }
  }
  return out;
}

PointSet DirectImage::preimage(PointSet v) const {
  if (!is_downset(target, v)) throw InvalidInput("direct image queried at a non-downset");
  PointSet u = 0;
  for (int x = 0; x < source.base.points(); ++x) {
    if ((v >> base_map[x]) & 1u) u |= PointSet{1} << x;
  }
  return u;
}

std::vector<Section> DirectImage::sections(PointSet v, const Limits& limits) const {
  return sections_over(source, preimage(v), limits);
}

DirectImage direct_image(const Bundle& b, const Poset& y, const std::vector<int>& f) {
  validate_bundle(b);
  if (static_cast<int>(f.size()) != b.base.points()) {
    throw InvalidInput("direct_image: map has wrong length");
  }
  for (int v : f) {
    if (v < 0 || v >= y.points()) throw InvalidInput("direct_image: value out of range");
  }
  if (!is_monotone(b.base, y, f)) throw NotMonotone("direct_image requires a monotone map");
  return DirectImage{b, y, f};
}

bool direct_image_satisfies_sheaf_condition(const DirectImage& di, const Limits& limits) {
  std::vector<PointSet> downs = downsets_of(di.target, limits);
  for (PointSet v1 : downs) {
    std::vector<Section> s1s = di.sections(v1, limits);
    PointSet p1 = di.preimage(v1);
    for (PointSet v2 : downs) {
      std::vector<Section> s2s = di.sections(v2, limits);
      std::vector<Section> glued = di.sections(v1 | v2, limits);
      PointSet p2 = di.preimage(v2);
      if (di.preimage(v1 | v2) != (p1 | p2)) return false;
      for (const Section& s1 : s1s) {
        for (const Section& s2 : s2s) {
          if (!(restrict_section(di.source, s1, p1 & p2) ==
                restrict_section(di.source, s2, p1 & p2))) {
            continue;
          }
          int matches = 0;
          for (const Section& g : glued) {
            if (restrict_section(di.source, g, p1) == s1 &&
                restrict_section(di.source, g, p2) == s2) {
              ++matches;
            }
          }
          if (matches != 1) return false;
        }
      }
    }
  }
  return true;
}

NatTransformation to_natural_transformation(const SheafMorphism& m, const Limits& limits) {
  validate_sheaf_morphism(m);
  NatTransformation nat{direct_image(m.source, m.target.base, m.base_map),
                        downsets_of(m.target.base, limits),
                        {},
                        {},
                        {}};
  const size_t nd = nat.downsets.size();
  nat.target_sections.resize(nd);
  nat.image_sections.resize(nd);
  nat.components.resize(nd);
  for (size_t v = 0; v < nd; ++v) {
    nat.target_sections[v] = sections_over(m.target, nat.downsets[v], limits);
    nat.image_sections[v] = nat.image.sections(nat.downsets[v], limits);
    for (const Section& s : nat.target_sections[v]) {
      Section image = apply_sheaf_morphism(m, s);
      auto it = std::lower_bound(nat.image_sections[v].begin(), nat.image_sections[v].end(),
                                 image);
      internal_check(it != nat.image_sections[v].end() && *it == image,
                     "transported section is not a section of the direct image");
      nat.components[v].push_back(static_cast<int>(it - nat.image_sections[v].begin()));
    }
  }
  // Naturality: transporting then restricting agrees with restricting then
  // transporting, for every pair of nested downsets.
  for (size_t v = 0; v < nd; ++v) {
    for (PointSet small : nat.downsets) {
      if ((small & ~nat.downsets[v]) != 0) continue;
      PointSet pre_small = nat.image.preimage(small);
      for (const Section& s : nat.target_sections[v]) {
        Section via_big =
            restrict_section(m.source, apply_sheaf_morphism(m, s), pre_small);
        Section via_small =
            apply_sheaf_morphism(m, restrict_section(m.target, s, small));
        internal_check(via_big == via_small, "naturality square does not commute");
      }
    }
  }
  return nat;
}

}  // namespace skewcat
