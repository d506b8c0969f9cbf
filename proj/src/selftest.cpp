#include "skewcat/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "skewcat/bundle.hpp"
#include "skewcat/congruence.hpp"
#include "skewcat/dist_lattice.hpp"
#include "skewcat/duality.hpp"
#include "skewcat/hom.hpp"

namespace skewcat {

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

std::string plural(std::size_t n, const char* what) {
  return std::to_string(n) + " " + what + (n == 1 ? "" : "s");
}

// ---- suite 1: axiom battery -------------------------------------------------

Outcome suite_axioms(std::uint64_t) {
  const auto pool = axiom_battery_algebras();
  std::size_t failures = 0;
  std::string first;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const SkewLattice& s = pool[i];
    std::string why;
    if (auto v = validate(s))
      why = std::string("law violation: ") + law_name(v->law);
    else if (!is_left_handed(s))
      why = "not left-handed";
    else if (!is_strongly_distributive(s))
      why = "not strongly distributive";
    else if (!is_normal(s))
      why = "not normal";
    else if (!is_symmetric(s))
      why = "not symmetric";
    else if (!check_useful_lemma(s))
      why = "natural-order lemma fails";
    if (!why.empty()) {
      ++failures;
      if (first.empty()) first = "instance " + std::to_string(i) + ": " + why;
    }
  }
  if (failures)
    return {false, plural(failures, "failure") + " in " + plural(pool.size(), "algebra") +
                       " (" + first + ")"};
  return {true, plural(pool.size(), "algebra") + ", 6 predicates each"};
}

// ---- suite 2: finite order duality ------------------------------------------

Outcome suite_order_duality(std::uint64_t) {
  std::size_t posets = 0;
  std::size_t lattices = 0;
  for (int m = 0; m <= 5; ++m) {
    for (const Poset& x : all_posets(m)) {
      const UnitPoset up = unit_poset(x);
      internal_check(static_cast<int>(up.map.size()) == x.points(),
                     "unit map must cover every point");
      std::vector<char> hit(up.map.size(), 0);
      for (std::size_t a = 0; a < up.map.size(); ++a) hit[static_cast<std::size_t>(up.map[a])] = 1;
      for (char h : hit)
        if (!h) return {false, "unit of a poset is not onto"};
      for (int a = 0; a < x.points(); ++a)
        for (int b = 0; b < x.points(); ++b)
          if (x.leq(a, b) != up.double_dual.poset.leq(up.map[static_cast<std::size_t>(a)],
                                                      up.map[static_cast<std::size_t>(b)]))
            return {false, "unit of a poset does not preserve and reflect order"};
      ++posets;

      const DownsetLattice dl = downset_lattice(x);
      if (dl.lattice.size() > 32) continue;
      const UnitLattice ul = unit_lattice(dl.lattice);
      std::vector<char> seen(ul.map.size(), 0);
      for (Elt a = 0; a < dl.lattice.size(); ++a) seen[static_cast<std::size_t>(ul.map[a])] = 1;
      for (char h : seen)
        if (!h) return {false, "unit of a lattice is not onto"};
      for (Elt a = 0; a < dl.lattice.size(); ++a)
        for (Elt b = 0; b < dl.lattice.size(); ++b) {
          if (ul.map[dl.lattice.meet(a, b)] !=
              ul.double_dual.lattice.meet(ul.map[a], ul.map[b]))
            return {false, "unit of a lattice does not preserve meet"};
          if (ul.map[dl.lattice.join(a, b)] !=
              ul.double_dual.lattice.join(ul.map[a], ul.map[b]))
            return {false, "unit of a lattice does not preserve join"};
        }
      ++lattices;
    }
  }
  return {true, plural(posets, "poset") + ", " + plural(lattices, "downset lattice")};
}

// ---- suite 3: algebra-side round trip ----------------------------------------

Outcome suite_algebra_round_trip(std::uint64_t seed) {
  const auto pool = seeded_random_algebras(seed, 200);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const SkewLattice& s = pool[i];
    const Phi ph = phi(s);
    const SkewLattice& dd = ph.double_dual.algebra;
    const auto& map = ph.hom.map;
    if (dd.size() != s.size())
      return {false, "instance " + std::to_string(i) + ": size changed under the round trip"};
    std::vector<Elt> inverse(static_cast<std::size_t>(dd.size()), -1);
    for (Elt a = 0; a < s.size(); ++a) {
      if (inverse[static_cast<std::size_t>(map[a])] != -1)
        return {false, "instance " + std::to_string(i) + ": round-trip map is not injective"};
      inverse[static_cast<std::size_t>(map[a])] = a;
    }
    for (Elt a = 0; a < s.size(); ++a)
      for (Elt b = 0; b < s.size(); ++b) {
        if (map[s.meet(a, b)] != dd.meet(map[a], map[b]))
          return {false, "instance " + std::to_string(i) + ": transported meet table differs"};
        if (map[s.join(a, b)] != dd.join(map[a], map[b]))
          return {false, "instance " + std::to_string(i) + ": transported join table differs"};
      }
  }
  std::size_t total = 0;
  for (const auto& s : pool) total += static_cast<std::size_t>(s.size());
  return {true, plural(pool.size(), "seeded algebra") + ", " + plural(total, "element") +
                    " total"};
}

// ---- suite 4: bundle-side round trip -----------------------------------------

Outcome suite_bundle_round_trip(std::uint64_t) {
  std::size_t count = 0;
  for (const Bundle& b : all_bundles(3, 2)) {
    const Psi ps = psi(b);
    const Bundle& dd = ps.double_dual.bundle;
    if (dd.base.points() != b.base.points())
      return {false, "double dual changed the number of base points"};
    std::vector<char> hit(static_cast<std::size_t>(dd.base.points()), 0);
    for (int x = 0; x < b.base.points(); ++x) hit[static_cast<std::size_t>(ps.base_map[x])] = 1;
    for (char h : hit)
      if (!h) return {false, "base comparison map is not onto"};
    for (int x = 0; x < b.base.points(); ++x)
      for (int y = 0; y < b.base.points(); ++y)
        if (b.base.leq(x, y) !=
            dd.base.leq(ps.base_map[static_cast<std::size_t>(x)],
                        ps.base_map[static_cast<std::size_t>(y)]))
          return {false, "base comparison map is not an order isomorphism"};
    for (int x = 0; x < b.base.points(); ++x) {
      const int image = ps.base_map[static_cast<std::size_t>(x)];
      const auto& fiber = ps.stalk_maps[static_cast<std::size_t>(x)];
      if (static_cast<int>(fiber.size()) != b.stalks[static_cast<std::size_t>(x)] ||
          b.stalks[static_cast<std::size_t>(x)] != dd.stalks[static_cast<std::size_t>(image)])
        return {false, "stalk sizes differ across the round trip"};
      std::vector<char> seen(fiber.size(), 0);
      for (int e : fiber) {
        if (e < 0 || e >= static_cast<int>(fiber.size()) || seen[static_cast<std::size_t>(e)])
          return {false, "stalk comparison map is not a bijection"};
        seen[static_cast<std::size_t>(e)] = 1;
      }
    }
    ++count;
  }
  return {true, plural(count, "bundle") + " round-tripped stalkwise"};
}

// ---- suite 5: kernel characterization ----------------------------------------

Outcome suite_kernels(std::uint64_t) {
  std::size_t checked = 0;
  for (const Bundle& b : all_bundles(3, 2)) {
    const SectionAlgebra sa = star_of_bundle(b);
    for (int x = 0; x < b.base.points(); ++x) {
      const Congruence by_witnesses = sim_h(sa.algebra, indicator_hom(sa, x));
      const Congruence by_kernel = kernel_of(ev(sa, x));
      if (!(by_witnesses == by_kernel))
        return {false, "partition mismatch at a base point of a section algebra"};
      ++checked;
    }
  }
  return {true, plural(checked, "base-point comparison")};
}

// ---- suite 6: prime filter enumeration ---------------------------------------

Outcome suite_prime_filters(std::uint64_t seed) {
  std::vector<SkewLattice> pool = axiom_battery_algebras();
  {
    auto seeded = seeded_random_algebras(seed, 200);
    pool.insert(pool.end(), seeded.begin(), seeded.end());
  }
  std::size_t pairs = 0;
  for (const SkewLattice& s : pool) {
    if (s.size() > 20) continue;
    for (const SkewHom& h : enumerate_proper_homs_to_2(s)) {
      const auto filters = prime_filters_over(s, h);
      const Congruence sims = sim_h(s, h);
      std::vector<std::vector<Elt>> expected;
      for (const auto& block : sims.blocks)
        if (std::find(block.begin(), block.end(), s.zero()) == block.end())
          expected.push_back(block);
      std::sort(expected.begin(), expected.end());
      if (filters != expected) return {false, "filters differ from the nonzero class blocks"};
      ++pairs;
    }
  }
  return {true, plural(pairs, "(algebra, hom) pair")};
}

// ---- suite 7: morphism correspondence ----------------------------------------

Outcome suite_morphisms(std::uint64_t) {
  const auto bundles = all_bundles(2, 2);
  std::size_t pairs = 0;
  std::size_t morphism_total = 0;
  for (const Bundle& e : bundles) {
    const SectionAlgebra e_star = star_of_bundle(e);
    for (const Bundle& f : bundles) {
      const SectionAlgebra f_star = star_of_bundle(f);
      const auto morphisms = enumerate_sheaf_morphisms(e, f);

      std::vector<SkewHom> proper;
      for (auto& map : enumerate_homs(f_star.algebra, e_star.algebra)) {
        SkewHom h{f_star.algebra, e_star.algebra, std::move(map)};
        if (is_proper(h)) proper.push_back(std::move(h));
      }
      if (morphisms.size() != proper.size())
        return {false, "counted " + std::to_string(morphisms.size()) + " morphisms but " +
                           std::to_string(proper.size()) + " proper homomorphisms"};

      for (const SheafMorphism& m : morphisms) {
        const SkewHom h = star_of_morphism(m, f_star, e_star);
        if (!(unstar_hom(h, f_star, e_star) == m))
          return {false, "a morphism fails to survive the there-and-back transport"};
      }
      for (const SkewHom& h : proper) {
        const SheafMorphism m = unstar_hom(h, f_star, e_star);
        if (std::find(morphisms.begin(), morphisms.end(), m) == morphisms.end())
          return {false, "a transported homomorphism is not among the enumerated morphisms"};
        if (star_of_morphism(m, f_star, e_star).map != h.map)
          return {false, "a homomorphism fails to survive the there-and-back transport"};
      }
      ++pairs;
      morphism_total += morphisms.size();
    }
  }
  return {true, plural(pairs, "bundle pair") + ", " + plural(morphism_total, "morphism")};
}

// ---- suite 8: constructive realization ---------------------------------------

Outcome suite_realization(std::uint64_t seed) {
  const auto pool = seeded_random_algebras(seed, 200);
  std::size_t sections = 0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const SkewLattice& s = pool[i];
    const Phi ph = phi(s);
    for (const Section& sec : ph.double_dual.sections) {
      const Elt target = ph.double_dual.element_of(sec);
      Elt oracle = -1;
      for (Elt a = 0; a < s.size(); ++a)
        if (ph.hom.map[a] == target) {
          if (oracle != -1)
            return {false, "instance " + std::to_string(i) + ": preimage is not unique"};
          oracle = a;
        }
      if (oracle == -1)
        return {false, "instance " + std::to_string(i) + ": section has no preimage"};
      if (realize_section(s, ph.dual, sec) != oracle)
        return {false,
                "instance " + std::to_string(i) + ": realization differs from the oracle"};
      ++sections;
    }
  }
  return {true, plural(sections, "section") + " across " + plural(pool.size(), "instance")};
}

// ---- suite 9: second decomposition -------------------------------------------

Outcome suite_second_decomposition(std::uint64_t seed) {
  std::size_t checked = 0;
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= 3; ++k) {
      const FiberProduct fp =
          fiber_product_over_two(primitive_left(j), primitive_right(k));
      if (!check_second_decomposition(fp.algebra))
        return {false, "a fiber product of primitives fails to decompose"};
      ++checked;
    }

  SplitMix64 root(seed);
  for (int i = 0; i < 50; ++i) {
    SplitMix64 rng = root.split(static_cast<std::uint64_t>(9000 + i));
    SkewLattice product = one();
    const int factors = 2 + static_cast<int>(rng.below(2));
    for (int f = 0; f < factors; ++f) {
      const int t = 1 + static_cast<int>(rng.below(3));
      const SkewLattice factor = rng.below(2) ? primitive_right(t) : primitive_left(t);
      if (product.size() * factor.size() > 60) break;
      product = direct_product(product, factor);
    }
    if (!check_second_decomposition(product))
      return {false, "a mixed product of primitives fails to decompose"};
    ++checked;
  }
  return {true, plural(checked, "product")};
}

}  // namespace

std::vector<SkewLattice> axiom_battery_algebras() {
  std::vector<SkewLattice> pool;
  for (int k = 0; k <= 4; ++k) pool.push_back(primitive_left(k));
  for (int x = 0; x <= 3; ++x)
    for (int y = 0; y <= 2; ++y) pool.push_back(partial_function_algebra(x, y));
  for (const Bundle& b : all_bundles(3, 2)) pool.push_back(star_of_bundle(b).algebra);
  return pool;
}

std::vector<SkewLattice> seeded_random_algebras(std::uint64_t seed, int count) {
  SplitMix64 root(seed);
  std::vector<SkewLattice> pool;
  pool.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    GeneratorConfig cfg;
    cfg.seed = root.split(static_cast<std::uint64_t>(i)).next();
    pool.push_back(random_lhsd_algebra(cfg));
  }
  return pool;
}

CriterionResult run_criterion(int number, std::uint64_t seed) {
  struct Entry {
    const char* name;
    Outcome (*fn)(std::uint64_t);
    double budget;
  };
  static const Entry table[] = {
      {"axiom battery", suite_axioms, 10.0},
      {"finite order duality units", suite_order_duality, 30.0},
      {"algebra round trip", suite_algebra_round_trip, 60.0},
      {"bundle round trip", suite_bundle_round_trip, 30.0},
      {"kernel characterization", suite_kernels, 0.0},
      {"prime filter enumeration", suite_prime_filters, 0.0},
      {"morphism correspondence", suite_morphisms, 60.0},
      {"constructive realization", suite_realization, 0.0},
      {"second decomposition", suite_second_decomposition, 0.0},
  };
  if (number < 1 || number > 9) throw InvalidInput("no such suite: " + std::to_string(number));
  const Entry& entry = table[number - 1];

  CriterionResult r;
  r.number = number;
  r.name = entry.name;
  r.budget_seconds = entry.budget;
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = entry.fn(seed);
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  const auto stop = std::chrono::steady_clock::now();
  r.seconds = std::chrono::duration<double>(stop - start).count();
  r.passed = outcome.passed;
  r.detail = outcome.detail;
  if (r.passed && r.budget_seconds > 0.0 && r.seconds >= r.budget_seconds) {
    r.passed = false;
    r.detail += " (exceeded the " + std::to_string(static_cast<int>(r.budget_seconds)) +
                " s budget)";
  }
  return r;
}

std::vector<CriterionResult> run_selftest(std::uint64_t seed) {
  std::vector<CriterionResult> results;
  for (int k = 1; k <= 9; ++k) results.push_back(run_criterion(k, seed));
  return results;
}

std::string format_result_line(const CriterionResult& r) {
  std::ostringstream out;
  out << "criterion " << r.number << " (" << r.name << "): "
      << (r.passed ? "pass" : "FAIL");
  if (!r.detail.empty()) out << " - " << r.detail;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << " [" << r.seconds << " s";
  if (r.budget_seconds > 0.0) out << " / " << static_cast<int>(r.budget_seconds) << " s";
  out << "]";
  return out.str();
}

}  // namespace skewcat
