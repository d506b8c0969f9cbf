#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "skewcat/congruence.hpp"
#include "skewcat/constructions.hpp"
#include "skewcat/duality.hpp"
#include "util.hpp"

using namespace skewcat;
using test::chain;

namespace {

// Digit view of a partial-function id: digit i is 0 for "undefined at i",
// e+1 for "letter e", packed little-endian in base y+1.
std::vector<int> digits_of(Elt id, int x, int y) {
  std::vector<int> d(static_cast<std::size_t>(x));
  for (int i = 0; i < x; ++i) {
    d[static_cast<std::size_t>(i)] = id % (y + 1);
    id /= (y + 1);
  }
  return d;
}

Elt id_of(const std::vector<int>& d, int y) {
  Elt id = 0;
  for (std::size_t i = d.size(); i-- > 0;) id = id * (y + 1) + d[i];
  return id;
}

}  // namespace

TEST_CASE("primitive algebras across the battery range") {
  CHECK(primitive_left(0) == one());
  CHECK(primitive_right(0) == one());
  CHECK(primitive_left(1) == two());
  for (int k = 0; k <= 4; ++k) {
    const SkewLattice p = primitive_left(k);
    CHECK(p.size() == k + 1);
    CHECK(!validate(p).has_value());
    CHECK(is_left_handed(p));
    CHECK(is_strongly_distributive(p));
    CHECK(d_relation(p).num_classes() == (k > 0 ? 2 : 1));
    const SkewLattice q = primitive_right(k);
    CHECK(!validate(q).has_value());
    CHECK(is_right_handed(q));
    CHECK(mirror(p) == q);
  }
  CHECK_THROWS_AS(primitive_left(-1), InvalidInput);
}

TEST_CASE("partial function algebra digit semantics") {
  const int x = 2, y = 2;
  const SkewLattice a = partial_function_algebra(x, y);
  REQUIRE(a.size() == 9);
  CHECK(a.zero() == 0);
  CHECK(!validate(a).has_value());
  CHECK(is_left_handed(a));
  CHECK(is_strongly_distributive(a));

  for (Elt p = 0; p < a.size(); ++p) {
    for (Elt q = 0; q < a.size(); ++q) {
      const auto dp = digits_of(p, x, y);
      const auto dq = digits_of(q, x, y);
      std::vector<int> dm(static_cast<std::size_t>(x)), dj(static_cast<std::size_t>(x));
      for (std::size_t i = 0; i < dp.size(); ++i) {
        dm[i] = (dp[i] != 0 && dq[i] != 0) ? dp[i] : 0;  // restrict, first wins
        dj[i] = (dq[i] != 0) ? dq[i] : dp[i];            // override, second wins
      }
      CHECK(a.meet(p, q) == id_of(dm, y));
      CHECK(a.join(p, q) == id_of(dj, y));
    }
  }

  // The natural order is extension of partial functions.
  CHECK(a.leq(1, 4));   // (1,0) <= (1,1)
  CHECK(!a.leq(1, 2));  // (1,0) vs (2,0)
  CHECK(!a.leq(4, 1));
}

TEST_CASE("partial function algebra edge sizes") {
  CHECK(partial_function_algebra(0, 2) == one());
  CHECK(partial_function_algebra(2, 0).size() == 1);
  CHECK(partial_function_algebra(1, 1) == two());
  CHECK(partial_function_algebra(1, 2) == primitive_left(2));
  CHECK(partial_function_algebra(3, 2).size() == 27);
  Limits tiny;
  tiny.max_size = 8;
  CHECK_THROWS_AS(partial_function_algebra(2, 2, tiny), SizeOverflow);
  CHECK_THROWS_AS(partial_function_algebra(-1, 2), InvalidInput);
}

TEST_CASE("generated subalgebras") {
  const SkewLattice a = partial_function_algebra(2, 2);

  SUBCASE("closure of two one-point functions") {
    // Generators (1,-) and (-,1): meet kills both, join glues them.
    const GeneratedSubalgebra g = generated_subalgebra(a, {1, 3}, 40);
    CHECK(g.elements == std::vector<Elt>{0, 1, 3, 4});
    CHECK(g.algebra.size() == 4);
    CHECK(is_homomorphism(g.inclusion.map, g.algebra, a));
    for (std::size_t i = 0; i < g.elements.size(); ++i)
      CHECK(g.inclusion(static_cast<Elt>(i)) == g.elements[i]);
    CHECK(!validate(g.algebra).has_value());
    CHECK(is_left_handed(g.algebra));
    CHECK(is_strongly_distributive(g.algebra));
  }
  SUBCASE("zero is always included") {
    const GeneratedSubalgebra g = generated_subalgebra(a, {}, 40);
    CHECK(g.elements == std::vector<Elt>{0});
    CHECK(g.algebra == one());
  }
  SUBCASE("the whole algebra can be generated") {
    const GeneratedSubalgebra g = generated_subalgebra(a, {1, 2, 3, 6}, 40);
    // One-point functions generate every partial function by overrides and
    // restrictions except nothing: all nine appear.
    CHECK(g.algebra.size() == 9);
  }
  SUBCASE("closure cap") {
    CHECK_THROWS_AS(generated_subalgebra(a, {1, 2, 3, 6}, 5), SizeOverflow);
  }
  SUBCASE("generator ids are validated") {
    CHECK_THROWS_AS(generated_subalgebra(a, {100}, 40), InvalidInput);
  }
}

TEST_CASE("direct products") {
  CHECK(direct_product(two(), two()) == test::boolean4());
  CHECK(direct_product(one(), two()) == two());

  const SkewLattice p = primitive_left(2);
  const SkewLattice prod = direct_product(p, two());
  CHECK(prod.size() == 6);
  CHECK(!validate(prod).has_value());
  CHECK(is_left_handed(prod));
  // Componentwise: (x1,y1) ^ (x2,y2) at id x*2+y.
  for (Elt x1 = 0; x1 < 3; ++x1)
    for (Elt y1 = 0; y1 < 2; ++y1)
      for (Elt x2 = 0; x2 < 3; ++x2)
        for (Elt y2 = 0; y2 < 2; ++y2) {
          CHECK(prod.meet(x1 * 2 + y1, x2 * 2 + y2) == p.meet(x1, x2) * 2 + (y1 & y2));
          CHECK(prod.join(x1 * 2 + y1, x2 * 2 + y2) == p.join(x1, x2) * 2 + (y1 | y2));
        }
}

TEST_CASE("fiber products over the two-element lattice") {
  SUBCASE("left times right primitive") {
    const FiberProduct fp = fiber_product_over_two(primitive_left(2), primitive_right(2));
    CHECK(fp.algebra.size() == 5);
    CHECK(fp.pairs == std::vector<std::pair<Elt, Elt>>{{0, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}});
    CHECK(!validate(fp.algebra).has_value());
    CHECK(!is_left_handed(fp.algebra));
    CHECK(!is_right_handed(fp.algebra));
    CHECK(is_normal(fp.algebra));
    CHECK(is_symmetric(fp.algebra));
    CHECK(check_second_decomposition(fp.algebra));
  }
  SUBCASE("operations are componentwise") {
    const SkewLattice l = primitive_left(3);
    const SkewLattice r = primitive_right(2);
    const FiberProduct fp = fiber_product_over_two(l, r);
    CHECK(fp.algebra.size() == 1 + 3 * 2);
    for (Elt i = 0; i < fp.algebra.size(); ++i) {
      for (Elt j = 0; j < fp.algebra.size(); ++j) {
        const auto [a1, b1] = fp.pairs[static_cast<std::size_t>(i)];
        const auto [a2, b2] = fp.pairs[static_cast<std::size_t>(j)];
        const std::pair<Elt, Elt> m{l.meet(a1, a2), r.meet(b1, b2)};
        const std::pair<Elt, Elt> jn{l.join(a1, a2), r.join(b1, b2)};
        CHECK(fp.pairs[static_cast<std::size_t>(fp.algebra.meet(i, j))] == m);
        CHECK(fp.pairs[static_cast<std::size_t>(fp.algebra.join(i, j))] == jn);
      }
    }
  }
  SUBCASE("requires primitive-like factors") {
    CHECK_THROWS_AS(fiber_product_over_two(test::boolean4(), primitive_left(2)),
                    PreconditionUnmet);
    CHECK_THROWS_AS(fiber_product_over_two(primitive_left(2), one()), PreconditionUnmet);
  }
}

TEST_CASE("second decomposition holds on a varied pool") {
  std::vector<SkewLattice> pool = {one(), two(), test::boolean4(), test::pentagon(),
                                   primitive_left(3), primitive_right(3),
                                   partial_function_algebra(2, 2),
                                   star_of_bundle({chain(2), {2, 2}}).algebra,
                                   direct_product(primitive_left(2), primitive_right(2)),
                                   fiber_product_over_two(primitive_left(3), primitive_right(3)).algebra};
  for (const SkewLattice& s : pool) CHECK(check_second_decomposition(s));
}

TEST_CASE("splitmix64 reference outputs") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(rng.next() == 0x06C45D188009454FULL);
  CHECK(rng.next() == 0xF88BB8A8724C81ECULL);

  SplitMix64 rng42(42);
  CHECK(rng42.next() == 0xBDD732262FEB6E95ULL);
  CHECK(rng42.next() == 0x28EFE333B266F103ULL);
}

TEST_CASE("splitmix64 bounds, determinism and splitting") {
  SplitMix64 a(7), b(7);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());

  SplitMix64 c(7);
  for (int i = 0; i < 200; ++i) {
    const uint64_t v = c.below(13);
    CHECK(v < 13);
  }
  CHECK_THROWS_AS(c.below(0), InvalidInput);

  // Splitting depends only on the original seed, not the consumed state.
  SplitMix64 fresh(99), used(99);
  (void)used.next();
  (void)used.next();
  SplitMix64 s1 = fresh.split(5);
  SplitMix64 s2 = used.split(5);
  CHECK(s1.next() == s2.next());
  // Distinct streams diverge.
  SplitMix64 s3 = fresh.split(6);
  CHECK(s1.next() != s3.next());
}

TEST_CASE("generator configuration and random structures") {
  GeneratorConfig cfg;
  CHECK_NOTHROW(validate_generator_config(cfg));
  GeneratorConfig bad = cfg;
  bad.max_stalk = 0;
  CHECK_THROWS_AS(validate_generator_config(bad), InvalidInput);
  bad = cfg;
  bad.max_closure_size = 0;
  CHECK_THROWS_AS(validate_generator_config(bad), InvalidInput);

  SUBCASE("random posets respect the cap and validate") {
    SplitMix64 rng(1);
    for (int i = 0; i < 50; ++i) {
      const Poset p = random_poset(rng, 3);
      CHECK(p.points() <= 3);
    }
  }
  SUBCASE("random bundles respect the caps") {
    SplitMix64 rng(2);
    for (int i = 0; i < 50; ++i) {
      const Bundle b = random_bundle(rng, cfg);
      CHECK_NOTHROW(validate_bundle(b));
      CHECK(b.base.points() <= cfg.max_base_points);
      for (int k : b.stalks) CHECK(k <= cfg.max_stalk);
    }
  }
  SUBCASE("random algebras are reproducible and lawful") {
    for (uint64_t seed : {0ULL, 1ULL, 42ULL, 12345ULL}) {
      GeneratorConfig c;
      c.seed = seed;
      const SkewLattice s1 = random_lhsd_algebra(c);
      const SkewLattice s2 = random_lhsd_algebra(c);
      CHECK(s1 == s2);
      CHECK(s1.size() <= c.max_closure_size);
      CHECK(!validate(s1).has_value());
      CHECK(is_left_handed(s1));
      CHECK(is_strongly_distributive(s1));
    }
    GeneratorConfig c;
    c.seed = 0;
    const SkewLattice s0 = random_lhsd_algebra(c);
    c.seed = 1;
    CHECK(random_lhsd_algebra(c) != s0);
  }
}

TEST_CASE("embedding into partial functions") {
  for (const SkewLattice& s : {primitive_left(3), partial_function_algebra(2, 1),
                               star_of_bundle({chain(2), {2, 1}}).algebra}) {
    const Embedding e = embed_into_partial_functions(s);
    CHECK(is_homomorphism(e.hom.map, s, e.target));
    std::set<Elt> image(e.hom.map.begin(), e.hom.map.end());
    CHECK(image.size() == static_cast<std::size_t>(s.size()));
  }
}
