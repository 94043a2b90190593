#include "motivic/zeta.hpp"

#include <map>
#include <set>

#include "motivic/errors.hpp"
#include "motivic/power_structure.hpp"
#include "motivic/text.hpp"
#include "motivic/varieties.hpp"

namespace motivic {

TruncatedSeries kapranov_zeta(const MotivicClass& c, int order) {
  return power(TruncatedSeries::geometric(order), c);
}

MotivicClass symmetric_power_class(const MotivicClass& c, int m) {
  if (m < 0) throw InvalidArgument("symmetric power index must be nonnegative");
  return kapranov_zeta(c, m).coefficient(m);
}

VerificationReport verify_theorem1(int n, int order) {
  if (n < 0 || order < 0) throw InvalidArgument("verify_theorem1 needs n >= 0 and order >= 0");
  VerificationReport report("theorem1", {{"n", n}, {"order", order}});
  const auto zeta = kapranov_zeta(MotivicClass::lefschetz(n), order);
  for (int i = 0; i <= order; ++i) {
    report.expect_equal("[S^" + std::to_string(i) + " A^" + std::to_string(n) + "] = L^" +
                            std::to_string(i * n),
                        zeta[i], MotivicClass::lefschetz(i * n));
  }
  return report;
}

VerificationReport verify_scaling(const MotivicClass& c, int order) {
  VerificationReport report("scaling", {{"class", format_class(c)}, {"order", order}});
  const auto lhs = kapranov_zeta(MotivicClass::lefschetz() * c, order);
  const auto rhs = substitute(kapranov_zeta(c, order), MotivicClass::lefschetz(), 1);
  report.expect_equal("zeta_{L c}(T) = zeta_c(L T)", lhs, rhs);
  return report;
}

VerificationReport verify_lemma(const TruncatedSeries& a, const MotivicClass& m, int s) {
  if (s < 0) throw InvalidArgument("lemma needs s >= 0");
  VerificationReport report("lemma", {{"A", format_series(a)}, {"M", format_class(m)}, {"s", s}});
  const auto scale = MotivicClass::lefschetz(s);
  const auto lhs = power(substitute(a, scale, 1), m);
  const auto rhs = substitute(power(a, m), scale, 1);
  report.expect_equal("(A(L^s T))^M = (A(T)^M)|_{T -> L^s T}", lhs, rhs);
  return report;
}

namespace {

// [prod_j S^{i_j} C^j] through the zeta functions of the factors.
MotivicClass stratum_class(const StrataSignature& s) {
  MotivicClass product = 1;
  for (int j = 1; j <= static_cast<int>(s.multiplicities.size()); ++j) {
    if (s[j] == 0) continue;
    product *= symmetric_power_class(MotivicClass::lefschetz(j), s[j]);
  }
  return product;
}

mpz_class binomial(int n, int k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

VerificationReport verify_theorem2_finite(int m, int n) {
  if (m < 1 || n < 0) throw InvalidArgument("verify_theorem2_finite needs m >= 1, N >= 0");
  VerificationReport report("theorem2-finite", {{"m", m}, {"N", n}});
  const auto sym = symmetric_power_class(projective_class(n), m);
  const auto grassmannian = grassmannian_class(m, m + n);
  const auto gaussian = gaussian_binomial(m + n, m);
  report.expect_equal("[S^m P^N] = [Gr(m, m+N)]", sym, grassmannian);
  report.expect_equal("[Gr(m, m+N)] = gaussian_binomial(m+N, m)", grassmannian, gaussian);
  report.expect_equal("gaussian_binomial(m+N, m) at L=1 = C(m+N, m)",
                      eval_at(gaussian, 1).get_str(), binomial(m + n, m).get_str());

  // Strata of S^m P^N are the signatures living at level <= N; cells of
  // Gr(m, m+N) are partitions with largest part <= N.
  MotivicClass strata_sum;
  const auto cells = schubert_cells(m, m + n);
  for (int dim = 0; dim <= m * n; ++dim) {
    std::size_t strata = 0;
    for (const auto& [sig, lambda] : match_strata(m, dim)) {
      if (stratum_min_level(sig) > n) continue;
      ++strata;
      strata_sum += stratum_class(sig);
      if (cell_min_level(lambda, m) != m + stratum_min_level(sig)) {
        report.fail("filtration level of " + to_string(sig) + " matches " + to_string(lambda),
                    std::to_string(stratum_min_level(sig)), std::to_string(cell_min_level(lambda, m) - m));
      }
    }
    std::size_t cells_here = 0;
    for (const auto& cell : cells) cells_here += cell.weight() == dim ? 1 : 0;
    report.expect_equal("#strata = #cells in dimension " + std::to_string(dim), std::to_string(strata),
                        std::to_string(cells_here));
  }
  report.expect_equal("sum over strata of [prod_j S^{i_j} C^j] = [Gr(m, m+N)]", strata_sum,
                      grassmannian);
  return report;
}

VerificationReport verify_strata(int m, int max_dim) {
  if (m < 1 || max_dim < 0) throw InvalidArgument("verify_strata needs m >= 1, max_dim >= 0");
  VerificationReport report("strata", {{"m", m}, {"max_dim", max_dim}});
  std::map<std::pair<int, int>, MotivicClass> part_classes;  // (j, i) -> [S^i C^j]
  for (int n = 0; n <= max_dim; ++n) {
    const std::string at = " (n=" + std::to_string(n) + ")";
    const auto pairs = match_strata(m, n);
    const auto by_part = count_partitions_bounded_part(n, m);
    const auto by_length = count_partitions_bounded_length(n, m);
    report.expect_equal("#strata = #partitions with parts <= m" + at, std::to_string(pairs.size()),
                        std::to_string(by_part));
    report.expect_equal("parts <= m count = at most m parts count" + at, std::to_string(by_part),
                        std::to_string(by_length));

    for (const auto& [sig, lambda] : pairs) {
      MotivicClass parts = 1;
      for (int j = 1; j <= static_cast<int>(sig.multiplicities.size()); ++j) {
        if (sig[j] == 0) continue;
        auto [it, fresh] = part_classes.try_emplace({j, sig[j]});
        if (fresh) it->second = symmetric_power_class(MotivicClass::lefschetz(j), sig[j]);
        parts *= it->second;
      }
      report.expect_equal("prod_j [S^{i_j} C^j] = L^n for " + to_string(sig) + at, parts,
                          MotivicClass::lefschetz(n));
    }

    std::set<std::vector<int>> cells;
    for (const auto& cell : schubert_cells_of_dimension(m, n)) cells.insert(cell.parts);
    std::set<std::vector<int>> hit;
    for (const auto& [sig, lambda] : pairs) {
      if (sig.dimension() != n || lambda.weight() != n) {
        report.fail("dimension preserved for " + to_string(sig) + at, std::to_string(sig.dimension()),
                    std::to_string(lambda.weight()));
      }
      if (!cells.contains(lambda.parts)) {
        report.fail("image is a Schubert cell" + at, to_string(lambda), "not a cell of Gr(m, inf)");
      }
      if (!hit.insert(lambda.parts).second) {
        report.fail("injective" + at, to_string(sig), to_string(lambda) + " hit twice");
      }
      if (cell_min_level(lambda, m) != m + stratum_min_level(sig)) {
        report.fail("filtration levels agree for " + to_string(sig) + at,
                    std::to_string(m + stratum_min_level(sig)), std::to_string(cell_min_level(lambda, m)));
      }
    }
    report.expect_equal("surjective onto cells" + at, std::to_string(hit.size()), std::to_string(cells.size()));
  }
  return report;
}

MotivicClass bgl_class(int m) {
  if (m < 1) throw InvalidArgument("BGL(m) needs m >= 1");
  MotivicPolynomial denominator = 1;
  for (int i = 0; i < m; ++i) denominator *= MotivicPolynomial::lefschetz(m) - MotivicPolynomial::lefschetz(i);
  return MotivicClass(1, denominator);
}

std::vector<MotivicClass> stack_zeta_bcstar(int order) {
  if (order < 0) throw InvalidArgument("series order must be nonnegative");
  std::vector<MotivicClass> out{1};
  for (int m = 1; m <= order; ++m) {
    // (L^m - L^{m-1})(L^m - L^{m-2}) ... (L^m - 1)
    MotivicPolynomial denominator = 1;
    for (int i = m - 1; i >= 0; --i) {
      denominator *= MotivicPolynomial::lefschetz(m) - MotivicPolynomial::lefschetz(i);
    }
    out.emplace_back(MotivicPolynomial::lefschetz(m * m - m), denominator);
  }
  return out;
}

VerificationReport verify_bcstar(int order) {
  if (order < 1) throw InvalidArgument("verify_bcstar needs order >= 1");
  VerificationReport report("bcstar", {{"order", order}});
  const auto c = stack_zeta_bcstar(order);
  report.expect_equal("c_0 = 1", c[0], MotivicClass(1));
  report.expect_equal("c_1 = 1/(L-1)", c[1], parse_class("1/(L-1)"));
  report.expect_equal("c_1 prints as displayed", format_class(c[1]), "1/(L - 1)");
  if (order >= 2) {
    report.expect_equal("c_2 = L^2/((L^2-L)(L^2-1))", c[2], parse_class("L^2/((L^2-L)*(L^2-1))"));
  }
  const auto lefschetz = [](int e) { return MotivicClass::lefschetz(e); };
  for (int m = 1; m <= order; ++m) {
    const std::string at = " (m=" + std::to_string(m) + ")";
    const auto& cm = c[static_cast<std::size_t>(m)];
    report.expect_equal("c_m = L^{m^2-m} [BGL(m)]" + at, cm, lefschetz(m * m - m) * bgl_class(m));
    report.expect_equal("c_m (L^m - 1) = c_{m-1} L^{m-1}" + at, cm * (lefschetz(m) - 1),
                        c[static_cast<std::size_t>(m - 1)] * lefschetz(m - 1));
    MotivicPolynomial simplified_den = 1;
    for (int i = 1; i <= m; ++i) simplified_den *= MotivicPolynomial::lefschetz(i) - 1;
    report.expect_equal("c_m = L^{m(m-1)/2} / prod (L^i - 1)" + at, cm,
                        MotivicClass(MotivicPolynomial::lefschetz(m * (m - 1) / 2), simplified_den));
  }
  return report;
}

}  // namespace motivic
