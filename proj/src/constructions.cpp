#include "skewcat/constructions.hpp"

#include <algorithm>

#include "skewcat/congruence.hpp"
#include "skewcat/duality.hpp"
#include "skewcat/errors.hpp"

namespace skewcat {

SkewLattice primitive_left(int t_size) {
  if (t_size < 0) throw InvalidInput("primitive_left: negative class size");
  const int n = t_size + 1;
  std::vector<Elt> meet(static_cast<size_t>(n) * n), join(static_cast<size_t>(n) * n);
  for (Elt i = 0; i < n; ++i) {
    for (Elt j = 0; j < n; ++j) {
      meet[static_cast<size_t>(i) * n + j] = (i == 0 || j == 0) ? 0 : i;
      join[static_cast<size_t>(i) * n + j] = (j == 0) ? i : j;
    }
  }
  return SkewLattice(n, 0, std::move(meet), std::move(join));
}

SkewLattice primitive_right(int t_size) { return mirror(primitive_left(t_size)); }

SkewLattice partial_function_algebra(int x_size, int y_size, const Limits& limits) {
  if (x_size < 0 || y_size < 0) throw InvalidInput("partial_function_algebra: negative size");
  long long count = 1;
  for (int i = 0; i < x_size; ++i) {
    count *= y_size + 1;
    if (count > limits.max_size) {
      throw SizeOverflow("partial function algebra exceeds the cap of " +
                         std::to_string(limits.max_size) + " elements");
    }
  }
  const int n = static_cast<int>(count);
  // Element ids are digit vectors little-endian in base y_size+1; digit 0
  // means undefined, digit e+1 means value e.
  auto digits_of = [&](Elt id) {
    std::vector<int> d(x_size);
    for (int i = 0; i < x_size; ++i) {
      d[i] = id % (y_size + 1);
      id /= (y_size + 1);
    }
    return d;
  };
  auto id_of = [&](const std::vector<int>& d) {
    Elt id = 0;
    for (int i = x_size - 1; i >= 0; --i) id = id * (y_size + 1) + d[i];
    return id;
  };
  std::vector<Elt> meet(static_cast<size_t>(n) * n), join(static_cast<size_t>(n) * n);
  for (Elt a = 0; a < n; ++a) {
    std::vector<int> da = digits_of(a);
    for (Elt b = 0; b < n; ++b) {
      std::vector<int> db = digits_of(b), dm(x_size), dj(x_size);
      for (int i = 0; i < x_size; ++i) {
        dm[i] = (da[i] != 0 && db[i] != 0) ? da[i] : 0;
        dj[i] = (db[i] != 0) ? db[i] : da[i];
      }
      meet[static_cast<size_t>(a) * n + b] = id_of(dm);
      join[static_cast<size_t>(a) * n + b] = id_of(dj);
    }
  }
  SkewLattice s(n, 0, std::move(meet), std::move(join));
  internal_check(!validate(s, limits).has_value() && is_left_handed(s) &&
                     is_strongly_distributive(s),
                 "partial function algebra fails its own laws");
  return s;
}

GeneratedSubalgebra generated_subalgebra(const SkewLattice& a, std::vector<Elt> gens,
                                         int max_closure) {
  if (max_closure < 1) throw InvalidInput("generated_subalgebra: cap must be positive");
  for (Elt g : gens) {
    if (g < 0 || g >= a.size()) throw InvalidInput("generated_subalgebra: generator out of range");
  }
  std::vector<uint8_t> in(a.size(), 0);
  std::vector<Elt> elements{a.zero()};
  in[a.zero()] = 1;
  for (Elt g : gens) {
    if (!in[g]) {
      in[g] = 1;
      elements.push_back(g);
    }
  }
  // Fixpoint closure: grow until no meet or join escapes the set.
  for (size_t fresh = 0; fresh < elements.size(); ++fresh) {
    for (size_t i = 0; i <= fresh; ++i) {
      for (Elt c : {a.meet(elements[fresh], elements[i]), a.meet(elements[i], elements[fresh]),
                    a.join(elements[fresh], elements[i]), a.join(elements[i], elements[fresh])}) {
        if (!in[c]) {
          in[c] = 1;
          elements.push_back(c);
          if (static_cast<int>(elements.size()) > max_closure) {
            throw SizeOverflow("generated subalgebra exceeds the cap of " +
                               std::to_string(max_closure) + " elements");
          }
        }
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  const int n = static_cast<int>(elements.size());
  std::vector<Elt> index(a.size(), -1);
  for (int i = 0; i < n; ++i) index[elements[i]] = i;
  std::vector<Elt> meet(static_cast<size_t>(n) * n), join(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      meet[static_cast<size_t>(i) * n + j] = index[a.meet(elements[i], elements[j])];
      join[static_cast<size_t>(i) * n + j] = index[a.join(elements[i], elements[j])];
    }
  }
  SkewLattice sub(n, index[a.zero()], std::move(meet), std::move(join));
  SkewHom inclusion{sub, a, elements};
  internal_check(is_homomorphism(inclusion.map, sub, a),
                 "subalgebra inclusion is not a homomorphism");
  return GeneratedSubalgebra{std::move(sub), std::move(inclusion), std::move(elements)};
}

SkewLattice direct_product(const SkewLattice& a, const SkewLattice& b) {
  const int na = a.size(), nb = b.size();
  const long long total = static_cast<long long>(na) * nb;
  if (total > global_limits().max_size) {
    throw SizeOverflow("direct product exceeds the configured cap");
  }
  const int n = static_cast<int>(total);
  auto id = [&](Elt x, Elt y) { return x * nb + y; };
  std::vector<Elt> meet(static_cast<size_t>(n) * n), join(static_cast<size_t>(n) * n);
  for (Elt x = 0; x < na; ++x) {
    for (Elt y = 0; y < nb; ++y) {
      for (Elt u = 0; u < na; ++u) {
        for (Elt v = 0; v < nb; ++v) {
          meet[static_cast<size_t>(id(x, y)) * n + id(u, v)] = id(a.meet(x, u), b.meet(y, v));
          join[static_cast<size_t>(id(x, y)) * n + id(u, v)] = id(a.join(x, u), b.join(y, v));
        }
      }
    }
  }
  return SkewLattice(n, id(a.zero(), b.zero()), std::move(meet), std::move(join));
}

FiberProduct fiber_product_over_two(const SkewLattice& a, const SkewLattice& b) {
  Quotient ra = reflection(a), rb = reflection(b);
  auto iso_a = find_isomorphism(ra.algebra, two());
  auto iso_b = find_isomorphism(rb.algebra, two());
  if (!iso_a || !iso_b) {
    throw PreconditionUnmet("fiber_product_over_two needs reflections isomorphic to 2");
  }
  std::vector<std::pair<Elt, Elt>> pairs;
  std::vector<int> index(static_cast<size_t>(a.size()) * b.size(), -1);
  for (Elt x = 0; x < a.size(); ++x) {
    for (Elt y = 0; y < b.size(); ++y) {
      if ((*iso_a)[ra.projection.map[x]] == (*iso_b)[rb.projection.map[y]]) {
        index[static_cast<size_t>(x) * b.size() + y] = static_cast<int>(pairs.size());
        pairs.emplace_back(x, y);
      }
    }
  }
  const int n = static_cast<int>(pairs.size());
  auto id = [&](Elt x, Elt y) {
    int i = index[static_cast<size_t>(x) * b.size() + y];
    internal_check(i >= 0, "fiber product is not closed under the operations");
    return static_cast<Elt>(i);
  };
  std::vector<Elt> meet(static_cast<size_t>(n) * n), join(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto [x, y] = pairs[i];
      auto [u, v] = pairs[j];
      meet[static_cast<size_t>(i) * n + j] = id(a.meet(x, u), b.meet(y, v));
      join[static_cast<size_t>(i) * n + j] = id(a.join(x, u), b.join(y, v));
    }
  }
  SkewLattice alg(n, id(a.zero(), b.zero()), std::move(meet), std::move(join));
  internal_check(!validate(alg).has_value(), "fiber product violates a skew lattice law");
  return FiberProduct{std::move(alg), std::move(pairs)};
}

bool check_second_decomposition(const SkewLattice& s) {
  if (validate(s).has_value()) {
    throw PreconditionUnmet("check_second_decomposition needs a valid skew lattice");
  }
  Quotient right_image = quotient(s, r_relation(s));  // S/R, maximal left-handed image
  Quotient left_image = quotient(s, l_relation(s));   // S/L, maximal right-handed image
  Quotient refl = reflection(s);
  if (!is_left_handed(right_image.algebra) || !is_right_handed(left_image.algebra)) {
    return false;
  }
  // D-class of each R-class and each L-class (constant on classes since D
  // contains both relations).
  const int nr = right_image.algebra.size(), nl = left_image.algebra.size();
  std::vector<Elt> dr(nr), dl(nl);
  for (Elt x = 0; x < s.size(); ++x) {
    dr[right_image.projection.map[x]] = refl.projection.map[x];
    dl[left_image.projection.map[x]] = refl.projection.map[x];
  }
  std::vector<std::pair<Elt, Elt>> pairs;
  std::vector<int> index(static_cast<size_t>(nr) * nl, -1);
  for (Elt u = 0; u < nr; ++u) {
    for (Elt v = 0; v < nl; ++v) {
      if (dr[u] == dl[v]) {
        index[static_cast<size_t>(u) * nl + v] = static_cast<int>(pairs.size());
        pairs.emplace_back(u, v);
      }
    }
  }
  const int n = static_cast<int>(pairs.size());
  std::vector<Elt> meet(static_cast<size_t>(n) * n), join(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto [u, v] = pairs[i];
      auto [w, z] = pairs[j];
      int mi = index[static_cast<size_t>(right_image.algebra.meet(u, w)) * nl +
                     left_image.algebra.meet(v, z)];
      int ji = index[static_cast<size_t>(right_image.algebra.join(u, w)) * nl +
                     left_image.algebra.join(v, z)];
      if (mi < 0 || ji < 0) return false;
      meet[static_cast<size_t>(i) * n + j] = mi;
      join[static_cast<size_t>(i) * n + j] = ji;
    }
  }
  int zero = index[static_cast<size_t>(right_image.projection.map[s.zero()]) * nl +
                   left_image.projection.map[s.zero()]];
  if (zero < 0) return false;
  SkewLattice pullback(n, zero, std::move(meet), std::move(join));
  std::vector<Elt> canonical(s.size());
  std::vector<uint8_t> hit(n, 0);
  for (Elt x = 0; x < s.size(); ++x) {
    int i = index[static_cast<size_t>(right_image.projection.map[x]) * nl +
                  left_image.projection.map[x]];
    if (i < 0) return false;
    canonical[x] = i;
    hit[i] = 1;
  }
  if (s.size() != n) return false;
  if (!std::all_of(hit.begin(), hit.end(), [](uint8_t b) { return b == 1; })) return false;
  return is_homomorphism(canonical, s, pullback);
}

uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

uint64_t SplitMix64::below(uint64_t bound) {
  if (bound == 0) throw InvalidInput("SplitMix64::below needs a positive bound");
  return next() % bound;
}

SplitMix64 SplitMix64::split(uint64_t stream) const {
  SplitMix64 mixer(seed_ ^ ((stream + 1) * 0x9E3779B97F4A7C15ULL));
  return SplitMix64(mixer.next());
}

void validate_generator_config(const GeneratorConfig& cfg) {
  if (cfg.max_base_points < 1 || cfg.max_stalk < 1 || cfg.max_generators < 1 ||
      cfg.max_closure_size < 1) {
    throw InvalidInput("generator config caps must be positive");
  }
}

Poset random_poset(SplitMix64& rng, int max_points) {
  if (max_points < 1) throw InvalidInput("random_poset: cap must be positive");
  const int m = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_points)));
  std::vector<uint8_t> leq(static_cast<size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i) leq[static_cast<size_t>(i) * m + i] = 1;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (rng.below(2) == 1) leq[static_cast<size_t>(i) * m + j] = 1;
    }
  }
  // Transitive closure stays antisymmetric: edges only point index-upward.
  for (int k = 0; k < m; ++k) {
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (leq[static_cast<size_t>(i) * m + k] && leq[static_cast<size_t>(k) * m + j]) {
          leq[static_cast<size_t>(i) * m + j] = 1;
        }
      }
    }
  }
  return Poset(m, std::move(leq));
}

Bundle random_bundle(SplitMix64& rng, const GeneratorConfig& cfg) {
  validate_generator_config(cfg);
  Bundle b{random_poset(rng, cfg.max_base_points), {}};
  b.stalks.resize(b.base.points());
  for (int& k : b.stalks) k = 1 + static_cast<int>(rng.below(cfg.max_stalk));
  return b;
}

SkewLattice random_lhsd_algebra(const GeneratorConfig& cfg) {
  validate_generator_config(cfg);
  SplitMix64 rng(cfg.seed);
  // Bias toward richer instances while staying inside the caps: of two bundle
  // draws keep the one with more sections, and take the larger of two uniform
  // draws for the generator count.
  Bundle b = random_bundle(rng, cfg);
  {
    Bundle alt = random_bundle(rng, cfg);
    if (star_of_bundle(alt).algebra.size() > star_of_bundle(b).algebra.size()) b = std::move(alt);
  }
  SectionAlgebra sa = star_of_bundle(b);
  const auto draw_count = [&] { return 1 + static_cast<int>(rng.below(cfg.max_generators)); };
  const int g = std::max(draw_count(), draw_count());
  std::vector<Elt> gens;
  gens.reserve(static_cast<size_t>(g));
  for (int i = 0; i < g; ++i) {
    Elt e = static_cast<Elt>(rng.below(sa.algebra.size()));
    if (std::find(gens.begin(), gens.end(), e) != gens.end())
      e = static_cast<Elt>(rng.below(sa.algebra.size()));  // one redraw on duplicates
    gens.push_back(e);
  }
  SkewLattice s = generated_subalgebra(sa.algebra, gens, cfg.max_closure_size).algebra;
  internal_check(!validate(s).has_value() && is_left_handed(s) && is_strongly_distributive(s),
                 "random subalgebra of a section algebra fails the laws");
  return s;
}

Embedding embed_into_partial_functions(const SkewLattice& s, const Limits& limits) {
  Phi ph = phi(s, limits);
  const int m = ph.dual.bundle.base.points();
  std::vector<int> offset(m + 1, 0);
  for (int p = 0; p < m; ++p) offset[p + 1] = offset[p] + ph.dual.bundle.stalks[p];
  const int alphabet = offset[m];
  SkewLattice target = partial_function_algebra(m, alphabet, limits);
  std::vector<Elt> map(s.size());
  for (Elt a = 0; a < s.size(); ++a) {
    Section sec = phi_section(s, ph.dual, a);
    Elt id = 0;
    for (int p = m - 1; p >= 0; --p) {
      int digit = ((sec.domain >> p) & 1u) ? offset[p] + sec.values[p] + 1 : 0;
      id = id * (alphabet + 1) + digit;
    }
    map[a] = id;
  }
  SkewHom hom{s, target, std::move(map)};
  internal_check(is_homomorphism(hom.map, hom.source, hom.target),
                 "partial function embedding is not a homomorphism");
  std::vector<Elt> sorted = hom.map;
  std::sort(sorted.begin(), sorted.end());
  internal_check(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
                 "partial function embedding is not injective");
  return Embedding{std::move(target), std::move(hom)};
}

}  // namespace skewcat
