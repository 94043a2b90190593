// Acceptance grid: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "motivic/suites.hpp"

namespace {

struct Criterion {
  int id;
  std::string statement;
  std::function<std::vector<motivic::SuiteResult>()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 42;

  const std::vector<Criterion> criteria{
      {1, "zeta of L^n has T^i coefficient L^(in), n <= 5, i <= 16",
       [] { return std::vector{motivic::run_theorem1_suite(5, 16)}; }},
      {2, "zeta_{Lc}(T) = zeta_c(LT) for c in {1, L, L^2, 1+L, 1+L+L^2}, order 12",
       [] { return std::vector{motivic::run_scaling_suite(12)}; }},
      {3, "(A(L^s T))^M = A^M(L^s T), 200 random cases, order 10",
       [seed] { return std::vector{motivic::run_lemma_suite(seed, 200, 10)}; }},
      {4, "power structure properties 1-7, 500 random cases",
       [seed] { return std::vector{motivic::run_property_suite(seed, 500, 10)}; }},
      {5, "configuration-space orbit count = integer power, m <= 6, order 8, 100 draws",
       [seed] { return std::vector{motivic::run_power_finite_suite(seed, 100, 6, 8)}; }},
      {6, "[S^m P^N] = [Gr(m, m+N)] = gaussian binomial, m + N <= 12, and C(m+N, m) at L = 1",
       [] { return std::vector{motivic::run_theorem2_finite_suite(12)}; }},
      {7, "strata of S^m CP^inf biject with Schubert cells, m <= 8, dim <= 40",
       [] { return std::vector{motivic::run_strata_suite(8, 40)}; }},
      {8, "BC* series coefficients c_1, c_2 and closed forms for m <= 8",
       [] { return std::vector{motivic::run_bcstar_suite(8)}; }},
      {9, "motivic count = Weil count = closed-point census, plus brute-force anchors",
       [] { return std::vector{motivic::run_oracle_suite(5)}; }},
  };

  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& c : criteria) {
    std::size_t cells = 0, checks = 0, bad = 0;
    std::vector<const motivic::VerificationReport*> failures;
    const auto suites = c.run();
    for (const auto& s : suites) {
      for (const auto& r : s.reports) {
        ++cells;
        checks += r.checks();
        if (!r.passed()) {
          ++bad;
          failures.push_back(&r);
        }
      }
    }
    const bool pass = bad == 0 && checks > 0;
    failed += pass ? 0 : 1;
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.statement << " [" << cells
              << " cells, " << checks << " identities]\n";
    for (std::size_t i = 0; i < failures.size() && i < 5; ++i) {
      for (const auto& f : failures[i]->failures()) {
        std::cout << "      " << failures[i]->params().dump() << " " << f.identity << ": " << f.lhs << " != " << f.rhs
                  << "\n";
      }
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << " (seed " << seed
            << ", " << seconds << " s)\n";
  return failed == 0 ? 0 : 1;
}
