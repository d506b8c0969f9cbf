#ifndef SKEWCAT_SELFTEST_HPP
#define SKEWCAT_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "skewcat/constructions.hpp"
#include "skewcat/skew_lattice.hpp"

namespace skewcat {

// One verification suite of the built-in battery.  `seconds` is wall time;
// suites with a positive `budget_seconds` must also finish inside it to pass.
struct CriterionResult {
  int number = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

// Runs one suite (1..9).  Exceptions are caught and reported as failures.
CriterionResult run_criterion(int number, std::uint64_t seed);

// Runs suites 1..9 in order.
std::vector<CriterionResult> run_selftest(std::uint64_t seed);

// Shared instance pools.  The axiom-battery pool holds every primitive
// algebra with at most 4 generators of its top class, every partial-function
// algebra on domains up to 3 and codomains up to 2, and the section algebra
// of every bundle with at most 3 base points and stalks of size at most 2.
std::vector<SkewLattice> axiom_battery_algebras();

// 200 seeded random left-handed strongly distributive algebras with the
// default generator caps; instance i uses stream i of the given seed.
std::vector<SkewLattice> seeded_random_algebras(std::uint64_t seed, int count);

std::string format_result_line(const CriterionResult& r);

}  // namespace skewcat

#endif  // SKEWCAT_SELFTEST_HPP
