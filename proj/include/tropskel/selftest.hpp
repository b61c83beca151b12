#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tropskel {

struct SuiteResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  double seconds = 0;
  std::string first_failure;  // description of the first failing case

  bool ok() const { return failures == 0 && cases > 0; }
};

/// Metric reduction against the unit-subdivision oracle on random integral
/// graphs (<= 6 vertices, <= 9 edges) and divisors with |coefficients| <= 5.
SuiteResult suite_reduction_oracle(long cases, std::uint64_t seed);

/// Classes of degree genus have effective members, and the reduced form at
/// v0 keeps at least deg - g chips on v0.
SuiteResult suite_riemann(long cases, std::uint64_t seed);

/// Good effective divisors on random weighted graphs of weighted genus >= 2,
/// class degree = weighted genus: conditions (i)-(iii) and equivalence.
SuiteResult suite_good_divisor(long cases, std::uint64_t seed);

/// Idempotence and class invariance of reduction, additivity of div,
/// chart invariance of lattice length, augmentation keeping cells primitive,
/// and unimodular cells being isometries.
SuiteResult suite_invariants(long cases, std::uint64_t seed);

/// Catalog graphs at degree t(g) synthesize faithful maps.
SuiteResult suite_synthesis();

/// Closed-form bounds: the consistency sweep 3 <= N <= d <= 50 and the planar cross-check.
SuiteResult suite_bounds();

std::vector<SuiteResult> run_all_suites(std::uint64_t seed);

}  // namespace tropskel
