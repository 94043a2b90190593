#include "motivic/varieties.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "motivic/errors.hpp"
#include "motivic/power_structure.hpp"

namespace motivic {

int Partition::weight() const {
  int w = 0;
  for (int p : parts) w += p;
  return w;
}

int StrataSignature::dimension() const {
  int d = 0;
  for (std::size_t j = 0; j < multiplicities.size(); ++j) {
    d += static_cast<int>(j + 1) * multiplicities[j];
  }
  return d;
}

int StrataSignature::size() const {
  int s = 0;
  for (int i : multiplicities) s += i;
  return s;
}

int StrataSignature::operator[](int j) const {
  if (j < 1 || static_cast<std::size_t>(j) > multiplicities.size()) return 0;
  return multiplicities[static_cast<std::size_t>(j - 1)];
}

namespace {

std::string join(const std::vector<int>& values, char open, char close) {
  std::ostringstream out;
  out << open;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out << ',';
    out << values[i];
  }
  out << close;
  return out.str();
}

}  // namespace

std::string to_string(const Partition& p) { return join(p.parts, '(', ')'); }
std::string to_string(const StrataSignature& s) { return join(s.multiplicities, '[', ']'); }

MotivicClass affine_class(int n) {
  if (n < 0) throw InvalidArgument("affine space dimension must be nonnegative");
  return MotivicClass::lefschetz(n);
}

MotivicClass projective_class(int n) {
  if (n < 0) throw InvalidArgument("projective space dimension must be nonnegative");
  std::vector<MotivicPolynomial::Term> terms;
  for (int i = 0; i <= n; ++i) terms.push_back({i, 1});
  return MotivicPolynomial::from_terms(std::move(terms));
}

MotivicClass gaussian_binomial(int n, int m) {
  if (m < 0 || n < 0 || m > n) {
    throw InvalidArgument("gaussian_binomial(N, m) needs 0 <= m <= N, got N=" + std::to_string(n) +
                          ", m=" + std::to_string(m));
  }
  MotivicPolynomial numerator = 1;
  MotivicPolynomial denominator = 1;
  for (int i = 1; i <= m; ++i) {
    numerator *= MotivicPolynomial::lefschetz(n - m + i) - 1;
    denominator *= MotivicPolynomial::lefschetz(i) - 1;
  }
  MotivicClass result(numerator, denominator);
  if (!result.is_laurent_polynomial()) throw std::logic_error("Gaussian binomial did not divide");
  return result;
}

std::vector<Partition> schubert_cells(int m, int n) {
  if (m < 0 || m > n) throw InvalidArgument("Gr(m, N) needs 0 <= m <= N");
  const int width = n - m;
  std::vector<Partition> out;
  std::vector<int> current;
  // Parts weakly decreasing, at most m of them, each <= width.
  std::function<void(int, int)> recurse = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.push_back({current});
      return;
    }
    if (static_cast<int>(current.size()) == m) return;
    for (int p = std::min(cap, remaining); p >= 1; --p) {
      current.push_back(p);
      recurse(remaining - p, p);
      current.pop_back();
    }
  };
  for (int weight = 0; weight <= m * width; ++weight) recurse(weight, width);
  return out;
}

std::vector<Partition> schubert_cells_of_dimension(int m, int n) {
  if (m < 0 || n < 0) throw InvalidArgument("cells need m, n >= 0");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> recurse = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.push_back({current});
      return;
    }
    if (static_cast<int>(current.size()) == m) return;
    for (int p = std::min(cap, remaining); p >= 1; --p) {
      current.push_back(p);
      recurse(remaining - p, p);
      current.pop_back();
    }
  };
  recurse(n, n);
  return out;
}

MotivicClass grassmannian_class(int m, int n) {
  std::vector<MotivicPolynomial::Term> terms;
  for (const auto& cell : schubert_cells(m, n)) terms.push_back({cell.weight(), 1});
  return MotivicPolynomial::from_terms(std::move(terms));
}

std::uint64_t count_partitions_bounded_part(int n, int m) {
  if (n < 0 || m < 0) throw InvalidArgument("partition counts need n, m >= 0");
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= m; ++part) {
    for (int total = part; total <= n; ++total) {
      ways[static_cast<std::size_t>(total)] += ways[static_cast<std::size_t>(total - part)];
    }
  }
  return ways[static_cast<std::size_t>(n)];
}

std::uint64_t count_partitions_bounded_length(int n, int m) {
  if (n < 0 || m < 0) throw InvalidArgument("partition counts need n, m >= 0");
  // p(n, k) = p(n, k - 1) + p(n - k, k): either fewer than k parts, or
  // exactly k parts and we remove one from each.
  std::vector<std::vector<std::uint64_t>> p(static_cast<std::size_t>(n) + 1,
                                            std::vector<std::uint64_t>(static_cast<std::size_t>(m) + 1, 0));
  for (int k = 0; k <= m; ++k) p[0][static_cast<std::size_t>(k)] = 1;
  for (int total = 1; total <= n; ++total) {
    for (int k = 1; k <= m; ++k) {
      auto& slot = p[static_cast<std::size_t>(total)][static_cast<std::size_t>(k)];
      slot = p[static_cast<std::size_t>(total)][static_cast<std::size_t>(k - 1)];
      if (total >= k) slot += p[static_cast<std::size_t>(total - k)][static_cast<std::size_t>(k)];
    }
  }
  return p[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
}

std::uint64_t schubert_count(int m, int n) {
  if (m < 1 || n < 0) throw InvalidArgument("schubert_count needs m >= 1, n >= 0");
  const auto by_part = count_partitions_bounded_part(n, m);
  const auto by_length = count_partitions_bounded_length(n, m);
  if (by_part != by_length) throw std::logic_error("conjugate partition counts disagree");
  return by_part;
}

std::vector<StrataSignature> strata_signatures(int m, int n) {
  if (m < 1 || n < 0) throw InvalidArgument("strata_signatures needs m >= 1, n >= 0");
  std::vector<StrataSignature> out;
  for (auto& v : enumerate_partition_vectors(n, n, m)) {
    out.push_back({std::move(v.multiplicities)});
  }
  return out;
}

Partition partition_of(const StrataSignature& s) {
  Partition out;
  for (int j = static_cast<int>(s.multiplicities.size()); j >= 1; --j) {
    for (int c = 0; c < s[j]; ++c) out.parts.push_back(j);
  }
  return out;
}

std::vector<std::pair<StrataSignature, Partition>> match_strata(int m, int n) {
  std::vector<std::pair<StrataSignature, Partition>> out;
  for (auto& s : strata_signatures(m, n)) {
    Partition lambda = partition_of(s);
    out.emplace_back(std::move(s), std::move(lambda));
  }
  return out;
}

int stratum_min_level(const StrataSignature& s) {
  for (int j = static_cast<int>(s.multiplicities.size()); j >= 1; --j) {
    if (s[j] > 0) return j;
  }
  return 0;
}

int cell_min_level(const Partition& lambda, int m) {
  if (lambda.length() > m) {
    throw InvalidArgument("partition " + to_string(lambda) + " has more than " + std::to_string(m) +
                          " parts");
  }
  return m + lambda.largest();
}

}  // namespace motivic
