#include "skewcat/duality.hpp"

#include <algorithm>
#include <map>

#include "skewcat/constructions.hpp"
#include "skewcat/dist_lattice.hpp"
#include "skewcat/errors.hpp"

namespace skewcat {

Elt SectionAlgebra::element_of(const Section& s) const {
  auto it = std::lower_bound(sections.begin(), sections.end(), s);
  if (it == sections.end() || !(*it == s)) {
    throw InvalidInput("element_of: not a section of this bundle");
  }
  return static_cast<Elt>(it - sections.begin());
}

SectionAlgebra star_of_bundle(const Bundle& b, const Limits& limits) {
  validate_bundle(b);
  std::vector<Section> sections;
  for (PointSet u : downsets_of(b.base, limits)) {
    for (Section& s : sections_over(b, u, limits)) {
      sections.push_back(std::move(s));
      if (static_cast<int>(sections.size()) > limits.max_size) {
        throw SizeOverflow("section algebra has more than " +
                           std::to_string(limits.max_size) + " elements");
      }
    }
  }
  const int n = static_cast<int>(sections.size());
  auto index = [&](const Section& s) {
    return static_cast<Elt>(std::lower_bound(sections.begin(), sections.end(), s) -
                            sections.begin());
  };
  std::vector<Elt> meet(static_cast<size_t>(n) * n), join(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      meet[static_cast<size_t>(i) * n + j] = index(meet_sections(b, sections[i], sections[j]));
      join[static_cast<size_t>(i) * n + j] = index(join_sections(b, sections[i], sections[j]));
    }
  }
  SectionAlgebra sa{b, SkewLattice(n, /*zero=*/0, std::move(meet), std::move(join)),
                    std::move(sections)};

  internal_check(!validate(sa.algebra, limits).has_value(),
                 "section algebra violates a skew lattice law");
  internal_check(is_left_handed(sa.algebra), "section algebra is not left-handed");
  internal_check(is_strongly_distributive(sa.algebra),
                 "section algebra is not strongly distributive");
  // Its reflection is the downset lattice of the base, on the nose: domains
  // ascend in the same order in both constructions.
  internal_check(reflection(sa.algebra).algebra == downset_lattice(b.base, limits).lattice.alg(),
                 "section algebra reflection differs from the downset lattice");
  for (Elt i = 0; i < n; ++i) {
    for (Elt j = 0; j < n; ++j) {
      bool is_restriction =
          (sa.sections[i].domain & ~sa.sections[j].domain) == 0 &&
          sa.sections[i] == restrict_section(b, sa.sections[j], sa.sections[i].domain);
      internal_check(sa.algebra.leq(i, j) == is_restriction,
                     "natural order of the section algebra is not restriction");
    }
  }
  return sa;
}

SkewHom indicator_hom(const SectionAlgebra& sa, int x) {
  if (x < 0 || x >= sa.bundle.base.points()) throw InvalidInput("indicator_hom: no such point");
  std::vector<Elt> map(sa.sections.size());
  for (size_t a = 0; a < sa.sections.size(); ++a) {
    map[a] = (sa.sections[a].domain >> x) & 1u;
  }
  SkewHom h{sa.algebra, two(), std::move(map)};
  internal_check(is_homomorphism(h.map, h.source, h.target) && is_proper(h),
                 "point indicator is not a proper homomorphism");
  return h;
}

SkewHom ev(const SectionAlgebra& sa, int x) {
  if (x < 0 || x >= sa.bundle.base.points()) throw InvalidInput("ev: no such point");
  SkewLattice target = primitive_left(sa.bundle.stalks[x]);
  std::vector<Elt> map(sa.sections.size());
  std::vector<uint8_t> hit(target.size(), 0);
  for (size_t a = 0; a < sa.sections.size(); ++a) {
    const Section& s = sa.sections[a];
    map[a] = ((s.domain >> x) & 1u) ? s.values[x] + 1 : 0;
    hit[map[a]] = 1;
  }
  SkewHom h{sa.algebra, std::move(target), std::move(map)};
  internal_check(is_homomorphism(h.map, h.source, h.target),
                 "evaluation is not a homomorphism");
  internal_check(std::all_of(hit.begin(), hit.end(), [](uint8_t b) { return b == 1; }),
                 "evaluation is not onto the primitive algebra");
  return h;
}

Congruence kernel_of(const SkewHom& h) {
  Congruence c = Congruence::from_class_of(h.map);
  internal_check(is_congruence(h.source, c), "kernel of a homomorphism must be a congruence");
  return c;
}

SkewHom star_of_morphism(const SheafMorphism& m, const SectionAlgebra& f_star,
                         const SectionAlgebra& e_star) {
  validate_sheaf_morphism(m);
  if (!(f_star.bundle == m.target) || !(e_star.bundle == m.source)) {
    throw InvalidInput("star_of_morphism: section algebras do not match the morphism");
  }
  std::vector<Elt> map(f_star.sections.size());
  for (size_t i = 0; i < f_star.sections.size(); ++i) {
    map[i] = e_star.element_of(apply_sheaf_morphism(m, f_star.sections[i]));
  }
  SkewHom h{f_star.algebra, e_star.algebra, std::move(map)};
  internal_check(is_homomorphism(h.map, h.source, h.target),
                 "transport along a sheaf morphism is not a homomorphism");
  internal_check(is_proper(h), "transport along a sheaf morphism is not proper");
  return h;
}

namespace {

void require_lhsd_and_proper(const SkewLattice& s, const SkewHom& h, const char* where) {
  if (validate(s).has_value() || !is_left_handed(s) || !is_strongly_distributive(s)) {
    throw PreconditionUnmet(std::string(where) +
                            " requires a left-handed strongly distributive skew lattice");
  }
  if (!(h.source == s) || !(h.target == two()) || !is_homomorphism(h.map, h.source, h.target)) {
    throw PreconditionUnmet(std::string(where) + " requires a homomorphism from s onto 2");
  }
  if (!is_proper(h)) {
    throw PreconditionUnmet(std::string(where) + " requires a proper homomorphism");
  }
}

}  // namespace

Congruence sim_h(const SkewLattice& s, const SkewHom& h) {
  require_lhsd_and_proper(s, h, "sim_h");
  const int n = s.size();
  const int words = (n + 63) / 64;
  // rel(a, b) iff some admissible pair (c, d) gives (a^d)vc = (b^d)vc.  Each
  // pair partitions elements by that value; union over all pairs.
  std::vector<uint64_t> rel(static_cast<size_t>(n) * words, 0);
  std::vector<std::vector<int>> bucket(n);
  std::vector<int> touched;
  std::vector<uint64_t> mask(words);
  for (Elt c = 0; c < n; ++c) {
    if (h.map[c] != 0) continue;
    for (Elt d = 0; d < n; ++d) {
      if (h.map[d] != 1) continue;
      touched.clear();
      for (Elt x = 0; x < n; ++x) {
        Elt key = s.join(s.meet(x, d), c);
        if (bucket[key].empty()) touched.push_back(key);
        bucket[key].push_back(x);
      }
      for (int key : touched) {
        std::fill(mask.begin(), mask.end(), 0);
        for (int x : bucket[key]) mask[x >> 6] |= uint64_t{1} << (x & 63);
        for (int x : bucket[key]) {
          uint64_t* row = rel.data() + static_cast<size_t>(x) * words;
          for (int w = 0; w < words; ++w) row[w] |= mask[w];
        }
        bucket[key].clear();
      }
    }
  }
  // Partition by reachability, then assert the relation was already an
  // equivalence (transitivity is a theorem here, not an assumption).
  std::vector<int> cls(n, -1);
  std::vector<std::vector<uint64_t>> class_mask;
  for (Elt x = 0; x < n; ++x) {
    if (cls[x] != -1) continue;
    int id = static_cast<int>(class_mask.size());
    class_mask.emplace_back(words, 0);
    std::vector<Elt> frontier{x};
    cls[x] = id;
    class_mask[id][x >> 6] |= uint64_t{1} << (x & 63);
    while (!frontier.empty()) {
      Elt y = frontier.back();
      frontier.pop_back();
      const uint64_t* row = rel.data() + static_cast<size_t>(y) * words;
      for (Elt z = 0; z < n; ++z) {
        if (((row[z >> 6] >> (z & 63)) & 1u) && cls[z] == -1) {
          cls[z] = id;
          class_mask[id][z >> 6] |= uint64_t{1} << (z & 63);
          frontier.push_back(z);
        }
      }
    }
  }
  for (Elt x = 0; x < n; ++x) {
    internal_check(std::equal(rel.begin() + static_cast<size_t>(x) * words,
                              rel.begin() + static_cast<size_t>(x + 1) * words,
                              class_mask[cls[x]].begin()),
                   "the witnessed relation is not transitive");
  }
  Congruence cong = Congruence::from_class_of(cls);
  internal_check(is_congruence(s, cong), "sim_h is not a congruence");
  for (const std::vector<Elt>& block : cong.blocks) {
    for (Elt a : block) {
      internal_check(h.map[a] == h.map[block[0]], "sim_h does not refine ker(h)");
    }
  }
  std::vector<Elt> zero_block;
  for (Elt a = 0; a < n; ++a) {
    if (h.map[a] == 0) zero_block.push_back(a);
  }
  internal_check(cong.blocks[cong.class_of[s.zero()]] == zero_block,
                 "the zero class of sim_h must be the h-kernel of 0");
  Quotient q = quotient(s, cong);
  Congruence qd = d_relation(q.algebra);
  internal_check(qd.num_classes() == 2 &&
                     qd.blocks[qd.class_of[q.algebra.zero()]].size() == 1,
                 "the quotient by sim_h is not primitive");
  return cong;
}

std::vector<std::vector<Elt>> prime_filters_over(const SkewLattice& s, const SkewHom& h) {
  Congruence sim = sim_h(s, h);  // also validates the preconditions
  const int n = s.size();
  std::vector<Elt> ones;
  std::vector<int> pos(n, -1);
  for (Elt a = 0; a < n; ++a) {
    if (h.map[a] == 1) {
      pos[a] = static_cast<int>(ones.size());
      ones.push_back(a);
    }
  }
  const int k = static_cast<int>(ones.size());
  if (k > 20) {
    throw SizeOverflow("prime_filters_over: h^{-1}(1) has " + std::to_string(k) +
                       " elements, enumeration cap is 20");
  }
  // Membership forced by a single element a: everything above a, and every
  // join of a with an h-zero element.
  std::vector<uint32_t> forced(k, 0);
  for (int i = 0; i < k; ++i) {
    for (Elt b = 0; b < n; ++b) {
      if (s.leq(ones[i], b)) forced[i] |= uint32_t{1} << pos[b];
      if (h.map[b] == 0) forced[i] |= uint32_t{1} << pos[s.join(ones[i], b)];
    }
  }
  std::vector<std::vector<int>> meet_pos(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) meet_pos[i][j] = pos[s.meet(ones[i], ones[j])];
  }
  Congruence dcls = d_relation(s);
  std::vector<uint32_t> class_bits;
  {
    std::vector<uint32_t> per_class(dcls.num_classes(), 0);
    for (int i = 0; i < k; ++i) per_class[dcls.class_of[ones[i]]] |= uint32_t{1} << i;
    for (uint32_t bits : per_class) {
      if (bits != 0) class_bits.push_back(bits);
    }
  }
  std::vector<uint32_t> minimal;
  for (int count = 1; count <= k; ++count) {
    // Gosper's hack: all k-bit masks of the given popcount, ascending.
    uint32_t m = (uint32_t{1} << count) - 1;
    uint32_t limit = (k == 32) ? 0xffffffffu : (uint32_t{1} << k);
    while (m < limit) {
      bool ok = true;
      for (uint32_t am : minimal) {
        if ((m & am) == am) {
          ok = false;
          break;
        }
      }
      for (int i = 0; ok && i < k; ++i) {
        if (!((m >> i) & 1u)) continue;
        if ((forced[i] & ~m) != 0) ok = false;
        for (int j = i; ok && j < k; ++j) {
          if (((m >> j) & 1u) && !((m >> meet_pos[i][j]) & 1u)) ok = false;
        }
      }
      for (uint32_t bits : class_bits) {
        if (!ok) break;
        if ((m & bits) == 0) ok = false;
      }
      if (ok) minimal.push_back(m);
      uint32_t low = m & (~m + 1);
      uint32_t ripple = m + low;
      m = ripple | (((m ^ ripple) >> 2) / low);
    }
  }
  std::vector<std::vector<Elt>> out;
  for (uint32_t m : minimal) {
    std::vector<Elt> filter;
    for (int i = 0; i < k; ++i) {
      if ((m >> i) & 1u) filter.push_back(ones[i]);
    }
    out.push_back(std::move(filter));
  }
  std::sort(out.begin(), out.end());
  std::vector<std::vector<Elt>> blocks;
  for (const std::vector<Elt>& block : sim.blocks) {
    if (h.map[block[0]] == 1) blocks.push_back(block);
  }
  std::sort(blocks.begin(), blocks.end());
  internal_check(out == blocks, "minimal preprime filters differ from the nonzero sim_h classes");
  return out;
}

DualBundle dual_bundle(const SkewLattice& s) {
  if (validate(s).has_value() || !is_left_handed(s) || !is_strongly_distributive(s)) {
    throw PreconditionUnmet(
        "dual_bundle requires a left-handed strongly distributive skew lattice");
  }
  DualBundle db;
  db.homs = enumerate_proper_homs_to_2(s);
  const int m = static_cast<int>(db.homs.size());
  std::vector<uint8_t> leq(static_cast<size_t>(m) * m, 1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (Elt a = 0; a < s.size(); ++a) {
        if (db.homs[i].map[a] < db.homs[j].map[a]) {
          leq[static_cast<size_t>(i) * m + j] = 0;
          break;
        }
      }
    }
  }
  db.bundle.base = Poset(m, std::move(leq));
  db.bundle.stalks.resize(m);
  db.sims.reserve(m);
  db.class_of.resize(m);
  db.class_reps.resize(m);
  for (int i = 0; i < m; ++i) {
    db.sims.push_back(sim_h(s, db.homs[i]));
    const Congruence& sim = db.sims.back();
    int zero_class = sim.class_of[s.zero()];
    db.class_of[i].assign(s.size(), -1);
    for (int cls = 0; cls < sim.num_classes(); ++cls) {
      if (cls == zero_class) continue;
      int stalk = static_cast<int>(db.class_reps[i].size());
      db.class_reps[i].push_back(sim.blocks[cls][0]);
      for (Elt a : sim.blocks[cls]) db.class_of[i][a] = stalk;
    }
    db.bundle.stalks[i] = static_cast<int>(db.class_reps[i].size());
    internal_check(db.bundle.stalks[i] >= 1, "a proper homomorphism yields an empty stalk");
  }
  // Cross-check the base against the prime-filter presentation: the spectrum
  // of the lattice reflection under reverse filter inclusion must match the
  // reverse pointwise order on homs.
  DistReflection refl = distributive_reflection(s);
  SpectrumResult sp = spectrum(refl.lattice);
  internal_check(sp.poset.points() == m,
                 "proper hom count differs from the prime filter count");
  std::vector<int> match(m, -1);
  for (int i = 0; i < m; ++i) {
    std::vector<Elt> filter;
    for (Elt a = 0; a < s.size(); ++a) {
      if (db.homs[i].map[a] == 1) filter.push_back(refl.projection.map[a]);
    }
    std::sort(filter.begin(), filter.end());
    filter.erase(std::unique(filter.begin(), filter.end()), filter.end());
    for (int p = 0; p < m; ++p) {
      if (sp.filters[p] == filter) {
        internal_check(match[i] == -1, "hom matches two prime filters");
        match[i] = p;
      }
    }
    internal_check(match[i] >= 0, "hom matches no prime filter of the reflection");
  }
  std::vector<uint8_t> seen(m, 0);
  for (int i = 0; i < m; ++i) seen[match[i]] = 1;
  for (int i = 0; i < m; ++i) {
    internal_check(seen[i] == 1, "prime filter matched by no hom");
    for (int j = 0; j < m; ++j) {
      internal_check(db.bundle.base.leq(i, j) == sp.poset.leq(match[i], match[j]),
                     "reverse pointwise order differs from reverse filter inclusion");
    }
  }
  return db;
}

Section phi_section(const SkewLattice& s, const DualBundle& db, Elt a) {
  if (a < 0 || a >= s.size()) throw InvalidInput("phi_section: element out of range");
  Section sec = empty_section(db.bundle);
  for (int p = 0; p < db.bundle.base.points(); ++p) {
    if (db.homs[p].map[a] == 1) {
      sec.domain |= PointSet{1} << p;
      sec.values[p] = db.class_of[p][a];
    }
  }
  return sec;
}

Phi phi(const SkewLattice& s, const Limits& limits) {
  DualBundle db = dual_bundle(s);
  SectionAlgebra dd = star_of_bundle(db.bundle, limits);
  std::vector<Elt> map(s.size());
  std::vector<uint8_t> hit(dd.sections.size(), 0);
  for (Elt a = 0; a < s.size(); ++a) {
    map[a] = dd.element_of(phi_section(s, db, a));
    hit[map[a]] = 1;
  }
  internal_check(is_homomorphism(map, s, dd.algebra), "phi is not a homomorphism");
  internal_check(s.size() == dd.algebra.size() &&
                     std::all_of(hit.begin(), hit.end(), [](uint8_t b) { return b == 1; }),
                 "phi is not bijective");
  SkewHom hom{s, dd.algebra, std::move(map)};
  return Phi{std::move(db), std::move(dd), std::move(hom)};
}

Psi psi(const Bundle& b, const Limits& limits) {
  SectionAlgebra star = star_of_bundle(b, limits);
  DualBundle dd = dual_bundle(star.algebra);
  const int m = b.base.points();
  internal_check(dd.bundle.base.points() == m,
                 "dual base size differs from the original base");
  std::vector<int> base_map(m, -1);
  for (int x = 0; x < m; ++x) {
    std::vector<Elt> ind(star.sections.size());
    for (size_t a = 0; a < star.sections.size(); ++a) {
      ind[a] = (star.sections[a].domain >> x) & 1u;
    }
    for (int p = 0; p < m; ++p) {
      if (dd.homs[p].map == ind) {
        internal_check(base_map[x] == -1, "point indicator matches two dual points");
        base_map[x] = p;
      }
    }
    internal_check(base_map[x] >= 0, "point indicator is missing from the dual base");
  }
  std::vector<uint8_t> seen(static_cast<size_t>(std::max(m, 1)), 0);
  for (int x = 0; x < m; ++x) seen[base_map[x]] = 1;
  for (int x = 0; x < m; ++x) {
    internal_check(seen[x] == 1, "base map is not onto the dual base");
    for (int y = 0; y < m; ++y) {
      internal_check(b.base.leq(x, y) == dd.bundle.base.leq(base_map[x], base_map[y]),
                     "base map does not preserve and reflect order");
    }
  }
  std::vector<std::vector<int>> stalk_maps(m);
  for (int x = 0; x < m; ++x) {
    internal_check(dd.bundle.stalks[base_map[x]] == b.stalks[x],
                   "stalk sizes differ across the double dual");
    stalk_maps[x].assign(b.stalks[x], -1);
    for (size_t a = 0; a < star.sections.size(); ++a) {
      const Section& s = star.sections[a];
      if (!((s.domain >> x) & 1u)) continue;
      int cls = dd.class_of[base_map[x]][static_cast<Elt>(a)];
      internal_check(cls >= 0, "section through x is h_x-zero in the double dual");
      int& slot = stalk_maps[x][s.values[x]];
      if (slot == -1) {
        slot = cls;
      } else {
        internal_check(slot == cls, "stalk image depends on the choice of section");
      }
    }
    std::vector<uint8_t> used(b.stalks[x], 0);
    for (int image : stalk_maps[x]) {
      internal_check(image >= 0 && used[image] == 0, "stalk map is not a bijection");
      used[image] = 1;
    }
  }
  return Psi{std::move(star), std::move(dd), std::move(base_map), std::move(stalk_maps)};
}

namespace {

// One covering piece: over the hat of d minus the hat of c, the element a
// has the section's class everywhere; c marks the overlap handled by
// recursion.
struct Piece {
  Elt a;
  Elt c;
  Elt d;
  PointSet c_hat;
};

class Realizer {
 public:
  Realizer(const SkewLattice& s, const DualBundle& db) : s_(s), db_(db) {}

  Elt realize(const Section& sec) {
    auto found = memo_.find(sec);
    if (found != memo_.end()) return found->second;
    Elt a = build(sec);
    memo_.emplace(sec, a);
    return a;
  }

 private:
  PointSet hat(Elt a) const {
    PointSet u = 0;
    for (int p = 0; p < db_.bundle.base.points(); ++p) {
      if (db_.homs[p].map[a] == 1) u |= PointSet{1} << p;
    }
    return u;
  }

  Elt build(const Section& sec) {
    const PointSet u_set = sec.domain;
    if (u_set == 0) return s_.zero();
    const int n = s_.size();
    const int m = db_.bundle.base.points();
    // An element whose hat is exactly the domain: join of the meets of
    // h^{-1}(1) over the domain points (the meet's hat is the principal
    // downset of its point).
    Elt u = s_.zero();
    for (int p = 0; p < m; ++p) {
      if (!((u_set >> p) & 1u)) continue;
      Elt d_star = -1;
      for (Elt b = 0; b < n; ++b) {
        if (db_.homs[p].map[b] == 1) d_star = (d_star == -1) ? b : s_.meet(d_star, b);
      }
      internal_check(d_star != -1, "proper hom with empty one-set");
      u = s_.join(u, d_star);
    }
    internal_check(hat(u) == u_set, "domain element does not cut out the domain");

    std::vector<Piece> pieces;
    PointSet covered = 0;
    for (int h = 0; h < m; ++h) {
      if (!((u_set >> h) & 1u) || ((covered >> h) & 1u)) continue;
      Elt a_h = db_.class_reps[h][sec.values[h]];
      PointSet t_set = 0;
      for (int p = 0; p < m; ++p) {
        if (((u_set >> p) & 1u) && db_.class_of[p][a_h] == sec.values[p]) {
          t_set |= PointSet{1} << p;
        }
      }
      Elt c_found = -1, d_found = -1;
      for (Elt d = 0; d < n && d_found == -1; ++d) {
        if (db_.homs[h].map[d] != 1) continue;
        for (Elt c = 0; c < n; ++c) {
          if (db_.homs[h].map[c] != 0) continue;
          bool ok = true;
          for (int p = 0; p < m; ++p) {
            if (db_.homs[p].map[d] == 1 && db_.homs[p].map[c] == 0 &&
                !((t_set >> p) & 1u)) {
              ok = false;
              break;
            }
          }
          if (ok) {
            d_found = d;
            c_found = c;
            break;
          }
        }
      }
      if (d_found == -1) throw NoRealization("no witness pair covers a domain point");
      // Cut both witnesses down so the piece sits inside the domain and
      // inside the hat of its element.
      Elt d2 = s_.meet(s_.meet(d_found, a_h), u);
      Elt c2 = s_.meet(s_.meet(c_found, d2), u);
      PointSet d_hat = hat(d2), c_hat = hat(c2);
      internal_check((c_hat & ~d_hat) == 0 && (d_hat & ~(hat(a_h) & u_set)) == 0 &&
                         (((d_hat & ~c_hat) >> h) & 1u) != 0 &&
                         (d_hat & ~c_hat & ~t_set) == 0,
                     "normalized witness pair lost its covering properties");
      covered |= d_hat & ~c_hat;
      pieces.push_back(Piece{a_h, c2, d2, c_hat});
    }
    Elt a = s_.zero();
    for (const Piece& piece : pieces) {
      Elt f = realize(restrict_section(db_.bundle, sec, piece.c_hat));
      a = s_.join(a, s_.join(s_.meet(piece.a, piece.d), f));
    }
    return a;
  }

  const SkewLattice& s_;
  const DualBundle& db_;
  std::map<Section, Elt> memo_;
};

}  // namespace

Elt realize_section(const SkewLattice& s, const DualBundle& db, const Section& sec) {
  if (static_cast<int>(db.class_of.size()) != db.bundle.base.points() ||
      (db.bundle.base.points() > 0 && !(db.homs[0].source == s))) {
    throw InvalidInput("realize_section: dual bundle does not belong to this algebra");
  }
  if (!is_valid_section(db.bundle, sec)) {
    throw InvalidInput("realize_section: not a section of the dual bundle");
  }
  Realizer realizer(s, db);
  Elt a = realizer.realize(sec);
  if (!(phi_section(s, db, a) == sec)) {
    throw NoRealization("constructed element does not realize the section");
  }
  return a;
}

SheafMorphism unstar_hom(const SkewHom& h, const SectionAlgebra& f_star,
                         const SectionAlgebra& e_star) {
  if (!(h.source == f_star.algebra) || !(h.target == e_star.algebra)) {
    throw InvalidInput("unstar_hom: hom does not run between the given section algebras");
  }
  if (!is_homomorphism(h.map, h.source, h.target)) {
    throw PreconditionUnmet("unstar_hom requires a homomorphism");
  }
  if (!is_proper(h)) throw NotProper("unstar_hom requires a proper homomorphism");
  const int nx = e_star.bundle.base.points();
  const int ny = f_star.bundle.base.points();
  std::vector<int> base_map(nx, -1);
  for (int x = 0; x < nx; ++x) {
    // f(x) is the unique y whose domain indicator pulls back to the domain
    // indicator of x along h.
    for (int y = 0; y < ny; ++y) {
      bool match = true;
      for (size_t b = 0; b < f_star.sections.size(); ++b) {
        bool via_y = (f_star.sections[b].domain >> y) & 1u;
        bool via_h = (e_star.sections[h.map[b]].domain >> x) & 1u;
        if (via_y != via_h) {
          match = false;
          break;
        }
      }
      if (match) {
        internal_check(base_map[x] == -1, "two base points match the pulled-back indicator");
        base_map[x] = y;
      }
    }
    internal_check(base_map[x] >= 0, "no base point matches the pulled-back indicator");
  }
  std::vector<std::vector<int>> fiber_maps(nx);
  for (int x = 0; x < nx; ++x) {
    int y = base_map[x];
    fiber_maps[x].assign(f_star.bundle.stalks[y], -1);
    for (size_t b = 0; b < f_star.sections.size(); ++b) {
      const Section& sb = f_star.sections[b];
      if (!((sb.domain >> y) & 1u)) continue;
      const Section& image = e_star.sections[h.map[b]];
      internal_check((image.domain >> x) & 1u, "image section lost the matched point");
      int& slot = fiber_maps[x][sb.values[y]];
      if (slot == -1) {
        slot = image.values[x];
      } else {
        internal_check(slot == image.values[x],
                       "fiber value depends on the choice of section");
      }
    }
    for (int v : fiber_maps[x]) internal_check(v >= 0, "a stalk element occurs in no section");
  }
  SheafMorphism m{e_star.bundle, f_star.bundle, std::move(base_map), std::move(fiber_maps)};
  validate_sheaf_morphism(m);
  internal_check(star_of_morphism(m, f_star, e_star).map == h.map,
                 "recovered morphism does not transport back to the hom");
  return m;
}

}  // namespace skewcat
