#include "motivic/suites.hpp"

#include <functional>
#include <optional>

#include "motivic/errors.hpp"
#include "motivic/oracle.hpp"
#include "motivic/power_structure.hpp"
#include "motivic/text.hpp"
#include "motivic/varieties.hpp"
#include "motivic/zeta.hpp"

namespace motivic {

bool SuiteResult::passed() const { return failed_count() == 0; }

std::size_t SuiteResult::failed_count() const {
  std::size_t failed = 0;
  for (const auto& r : reports) failed += r.passed() ? 0 : 1;
  return failed;
}

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32U)};
  return std::mt19937_64(seq);
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Runs cell(i) for i < count in parallel. An exception inside a cell turns
// into a failing report for that cell.
SuiteResult run_cells(const std::string& name, int count,
                      const std::function<VerificationReport(int)>& cell) {
  std::vector<std::optional<VerificationReport>> slots(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < count; ++i) {
    try {
      slots[static_cast<std::size_t>(i)] = cell(i);
    } catch (const std::exception& e) {
      VerificationReport report(name, {{"cell", i}});
      report.fail("cell completed without error", e.what(), "no exception");
      slots[static_cast<std::size_t>(i)] = std::move(report);
    }
  }
  SuiteResult result{name, {}};
  result.reports.reserve(slots.size());
  for (auto& s : slots) result.reports.push_back(std::move(*s));
  return result;
}

}  // namespace

MotivicClass random_effective_class(std::mt19937_64& rng, int max_degree, int max_coefficient) {
  std::vector<MotivicPolynomial::Term> terms;
  for (int e = 0; e <= max_degree; ++e) terms.push_back({e, uniform(rng, 0, max_coefficient)});
  return MotivicPolynomial::from_terms(std::move(terms));
}

MotivicClass random_laurent_class(std::mt19937_64& rng, int max_support, int max_exponent,
                                  int max_coefficient) {
  std::vector<MotivicPolynomial::Term> terms;
  const int support = uniform(rng, 1, max_support);
  for (int t = 0; t < support; ++t) {
    int c = uniform(rng, 1, max_coefficient);
    if (uniform(rng, 0, 1) == 1) c = -c;
    terms.push_back({uniform(rng, -max_exponent, max_exponent), c});
  }
  // Colliding exponents may merge or cancel; the support only shrinks.
  return MotivicPolynomial::from_terms(std::move(terms));
}

TruncatedSeries random_effective_series(std::mt19937_64& rng, int order, int max_t_degree) {
  const int degree = uniform(rng, 1, max_t_degree);
  std::vector<MotivicClass> coefficients{1};
  for (int i = 1; i <= degree; ++i) coefficients.push_back(random_effective_class(rng));
  return TruncatedSeries::from_polynomial(coefficients, order);
}

SuiteResult run_theorem1_suite(int max_n, int order) {
  return run_cells("theorem1", max_n + 1, [=](int n) { return verify_theorem1(n, order); });
}

SuiteResult run_scaling_suite(int order) {
  const std::vector<MotivicClass> classes{1, MotivicClass::lefschetz(), MotivicClass::lefschetz(2),
                                          parse_class("1+L"), parse_class("1+L+L^2")};
  return run_cells("scaling", static_cast<int>(classes.size()),
                   [&](int i) { return verify_scaling(classes[static_cast<std::size_t>(i)], order); });
}

SuiteResult run_lemma_suite(std::uint64_t seed, int trials, int order) {
  return run_cells("lemma", trials, [=](int t) {
    auto rng = trial_engine(seed, static_cast<std::uint64_t>(t));
    const auto a = random_effective_series(rng, order);
    const auto m = random_laurent_class(rng, 3);
    const int s = uniform(rng, 0, 3);
    return verify_lemma(a, m, s);
  });
}

SuiteResult run_property_suite(std::uint64_t seed, int trials, int max_order) {
  return run_cells("properties", trials, [=](int t) {
    auto rng = trial_engine(seed, static_cast<std::uint64_t>(t));
    const int order = uniform(rng, 1, max_order);
    const auto a = random_effective_series(rng, order);
    const auto b = random_effective_series(rng, order);
    const auto m = random_laurent_class(rng);
    const auto n = random_laurent_class(rng);
    const int step = uniform(rng, 1, 3);

    VerificationReport report("properties", {{"trial", t},
                                             {"seed", seed},
                                             {"A", format_series(a)},
                                             {"B", format_series(b)},
                                             {"M", format_class(m)},
                                             {"N", format_class(n)},
                                             {"l", step}});
    const auto one = TruncatedSeries::one(order);
    const auto a_m = power(a, m);
    const auto a_n = power(a, n);
    report.expect_equal("1: A^0 = 1", power(a, 0), one);
    report.expect_equal("2: A^1 = A", power(a, 1), a);
    report.expect_equal("3: (AB)^M = A^M B^M", power(a * b, m), a_m * power(b, m));
    report.expect_equal("4: A^(M+N) = A^M A^N", power(a, m + n), a_m * a_n);
    report.expect_equal("4: A^(-M) = (A^M)^(-1)", power(a, -m), invert(a_m));
    report.expect_equal("5: A^(MN) = (A^N)^M", power(a, m * n), power(a_n, m));
    const auto binomial = power(TruncatedSeries::from_polynomial(std::vector<MotivicClass>{1, 1}, order), m);
    report.expect_equal("6: (1+T)^M has constant term 1", binomial[0], MotivicClass(1));
    report.expect_equal("6: (1+T)^M has linear term M", binomial[1], m);
    report.expect_equal("7: A(T^l)^M = A^M(T^l)", power(substitute(a, 1, step), m),
                        substitute(a_m, 1, step));
    report.expect_equal("Euler factors expand back to A", expand(euler_factorize(a)), a);
    return report;
  });
}

SuiteResult run_power_finite_suite(std::uint64_t seed, int draws, int max_m, int order) {
  return run_cells("power-finite", draws, [=](int t) {
    auto rng = trial_engine(seed ^ 0x9e3779b97f4a7c15ULL, static_cast<std::uint64_t>(t));
    std::vector<long> a(static_cast<std::size_t>(uniform(rng, 1, 4)));
    for (auto& x : a) x = uniform(rng, -3, 3);
    nlohmann::ordered_json coefficients = a;
    VerificationReport report("power-finite", {{"draw", t}, {"a", coefficients}, {"order", order}});
    std::vector<MotivicClass> poly{1};
    for (long x : a) poly.emplace_back(x);
    const auto series = TruncatedSeries::from_polynomial(poly, order);
    for (int m = 0; m <= max_m; ++m) {
      report.expect_equal("orbit count = (1 + sum a_i T^i)^" + std::to_string(m),
                          power_finite(a, m, order), power(series, m));
    }
    return report;
  });
}

SuiteResult run_theorem2_finite_suite(int max_sum) {
  std::vector<std::pair<int, int>> grid;
  for (int m = 1; m <= max_sum; ++m) {
    for (int n = 0; m + n <= max_sum; ++n) grid.emplace_back(m, n);
  }
  return run_cells("theorem2-finite", static_cast<int>(grid.size()), [&](int i) {
    const auto [m, n] = grid[static_cast<std::size_t>(i)];
    return verify_theorem2_finite(m, n);
  });
}

SuiteResult run_strata_suite(int max_m, int max_dim) {
  return run_cells("strata", max_m, [=](int i) { return verify_strata(i + 1, max_dim); });
}

SuiteResult run_bcstar_suite(int order) {
  return run_cells("bcstar", 1, [=](int) { return verify_bcstar(order); });
}

SuiteResult run_oracle_suite(int max_m) {
  const std::vector<MotivicClass> classes{1,
                                          MotivicClass::lefschetz(),
                                          MotivicClass::lefschetz(2),
                                          parse_class("L+1"),
                                          projective_class(1),
                                          projective_class(2),
                                          grassmannian_class(2, 4)};
  const std::vector<std::int64_t> fields{2, 3, 4, 5};
  const int grid = static_cast<int>(classes.size() * fields.size());

  struct Anchor {
    const char* space;
    std::int64_t q;
    int m;
    long expected;
  };
  const std::vector<Anchor> anchors{{"A^1", 2, 2, 4}, {"P^1", 2, 2, 7}, {"P^1", 2, 3, 15}};

  return run_cells("oracle", grid + static_cast<int>(anchors.size()), [&](int i) {
    if (i < grid) {
      const auto& c = classes[static_cast<std::size_t>(i) / fields.size()];
      const auto q = fields[static_cast<std::size_t>(i) % fields.size()];
      return crosscheck_kapranov_weil(c, q, max_m);
    }
    const auto& anchor = anchors[static_cast<std::size_t>(i - grid)];
    const auto space = parse_space(anchor.space);
    VerificationReport report("brute-force-anchor", {{"space", anchor.space}, {"q", anchor.q}, {"m", anchor.m}});
    const auto brute = brute_force_cycles(space, anchor.q, anchor.m);
    const auto weil = weil_coefficients(counts_from_class(space_class(space), anchor.q, anchor.m), anchor.m);
    report.expect_equal("brute force = expected", std::to_string(brute), std::to_string(anchor.expected));
    report.expect_equal("brute force = Weil coefficient", std::to_string(brute), weil.get_str());
    return report;
  });
}

SuiteResult run_brute_force_suite() {
  const std::vector<std::string> spaces{"A^1", "A^2", "P^1", "P^2"};
  std::vector<std::tuple<std::string, std::int64_t, int>> grid;
  for (const auto& s : spaces) {
    for (std::int64_t q : {2, 3}) {
      for (int m = 0; m <= 3; ++m) grid.emplace_back(s, q, m);
    }
  }
  // Each brute-force count is itself parallel, so cells run one at a time.
  SuiteResult result{"brute-force", {}};
  for (const auto& [name, q, m] : grid) {
    const auto space = parse_space(name);
    VerificationReport report("brute-force", {{"space", name}, {"q", q}, {"m", m}});
    const auto table = counts_from_class(space_class(space), q, m);
    const auto brute = std::to_string(brute_force_cycles(space, q, m));
    report.expect_equal("brute force = Weil coefficient", brute, weil_coefficients(table, m).get_str());
    report.expect_equal("brute force = closed-point census", brute,
                        cycles_from_closed_points(closed_points(table), m).get_str());
    result.reports.push_back(std::move(report));
  }
  return result;
}

}  // namespace motivic
