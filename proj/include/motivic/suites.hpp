#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "motivic/motivic_class.hpp"
#include "motivic/report.hpp"
#include "motivic/series.hpp"

namespace motivic {

/// A named batch of reports. Cells run concurrently; reports are stored in
/// a fixed order regardless of scheduling.
struct SuiteResult {
  std::string name;
  std::vector<VerificationReport> reports;

  bool passed() const;
  std::size_t failed_count() const;
};

// Random inputs. Each trial seeds its own engine from (seed, trial), so
// results do not depend on thread scheduling.
std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial);

/// Polynomial in L, degree <= max_degree, coefficients in [0, max_coefficient].
MotivicClass random_effective_class(std::mt19937_64& rng, int max_degree = 2, int max_coefficient = 2);
/// At most `max_support` terms c L^e, e in [-max_exponent, max_exponent],
/// c a nonzero integer in [-max_coefficient, max_coefficient].
MotivicClass random_laurent_class(std::mt19937_64& rng, int max_support = 3, int max_exponent = 2,
                                  int max_coefficient = 2);
/// 1 + a_1 T + ... + a_d T^d with d <= max_t_degree and effective a_i.
TruncatedSeries random_effective_series(std::mt19937_64& rng, int order, int max_t_degree = 4);

/// zeta_{L^n} coefficients are L^{in}, n = 0..max_n.
SuiteResult run_theorem1_suite(int max_n = 5, int order = 16);
/// Scaling for c in {1, L, L^2, 1+L, 1+L+L^2}.
SuiteResult run_scaling_suite(int order = 12);
/// The lemma on random (A, M, s).
SuiteResult run_lemma_suite(std::uint64_t seed, int trials = 200, int order = 10);
/// The seven power-structure properties plus the Euler-factor round trip.
SuiteResult run_property_suite(std::uint64_t seed, int trials = 500, int max_order = 10);
/// power_finite against power with an integer exponent, m <= max_m.
SuiteResult run_power_finite_suite(std::uint64_t seed, int draws = 100, int max_m = 6, int order = 8);
/// Finite class identity for all m >= 1, N >= 0, m + N <= max_sum.
SuiteResult run_theorem2_finite_suite(int max_sum = 12);
/// Strata/cell bijection for m = 1..max_m, dimensions <= max_dim.
SuiteResult run_strata_suite(int max_m = 8, int max_dim = 40);
SuiteResult run_bcstar_suite(int order = 8);
/// Kapranov/Weil/census agreement on the class x q grid, and brute-force
/// anchors.
SuiteResult run_oracle_suite(int max_m = 5);
/// Brute force against the formula oracles on its whole supported range.
SuiteResult run_brute_force_suite();

}  // namespace motivic
