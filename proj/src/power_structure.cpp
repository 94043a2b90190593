#include "motivic/power_structure.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "motivic/errors.hpp"
#include "motivic/text.hpp"

namespace motivic {

int PartitionVector::weight() const {
  int w = 0;
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    w += static_cast<int>(i + 1) * multiplicities[i];
  }
  return w;
}

int PartitionVector::size() const {
  int s = 0;
  for (int k : multiplicities) s += k;
  return s;
}

int PartitionVector::operator[](int i) const {
  if (i < 1 || static_cast<std::size_t>(i) > multiplicities.size()) return 0;
  return multiplicities[static_cast<std::size_t>(i - 1)];
}

std::string to_string(const PartitionVector& v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.multiplicities.size(); ++i) {
    if (i != 0) out << ',';
    out << v.multiplicities[i];
  }
  out << ']';
  return out.str();
}

namespace {

void require_unit_constant(const TruncatedSeries& a) {
  if (!a[0].is_one()) {
    throw InvalidArgument("power structure needs constant term 1, got " + format_class(a[0]));
  }
}

// P_1..P_N with T*A'/A = sum_k P_k T^k, from k a_k = sum_{t=1}^k P_t a_{k-t}.
std::vector<MotivicClass> ghost_components(const TruncatedSeries& a) {
  const int n = a.order();
  std::vector<MotivicClass> ghost(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) {
    MotivicClass value = a[k] * MotivicClass(k);
    for (int t = 1; t < k; ++t) {
      if (a[k - t].is_zero()) continue;
      value -= ghost[static_cast<std::size_t>(t)] * a[k - t];
    }
    ghost[static_cast<std::size_t>(k)] = std::move(value);
  }
  return ghost;
}

// Generalized binomial coefficients of (1 - x)^(-n): C(n + j - 1, j), j = 0..count.
std::vector<mpz_class> negative_binomial_row(const mpz_class& n, int count) {
  std::vector<mpz_class> row(static_cast<std::size_t>(count) + 1);
  row[0] = 1;
  for (int j = 1; j <= count; ++j) {
    mpz_class next = row[static_cast<std::size_t>(j - 1)] * (n + (j - 1));
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(j));
    row[static_cast<std::size_t>(j)] = std::move(next);
  }
  return row;
}

MotivicPolynomial require_polynomial_exponent(const MotivicClass& e, int factor) {
  if (!e.is_laurent_polynomial()) {
    throw UnsupportedExponent("unsupported exponent " + format_class(e) + " in factor (1 - T^" +
                              std::to_string(factor) +
                              ")^(-b): only Laurent polynomials in L with integer coefficients "
                              "are supported");
  }
  return e.numerator();
}

}  // namespace

ExponentVector euler_factorize(const TruncatedSeries& a) {
  require_unit_constant(a);
  const int n = a.order();
  const auto ghost = ghost_components(a);
  ExponentVector out{n, std::vector<MotivicClass>(static_cast<std::size_t>(n))};
  for (int k = 1; k <= n; ++k) {
    MotivicClass value = ghost[static_cast<std::size_t>(k)];
    for (int i = 1; i < k; ++i) {
      if (k % i != 0) continue;
      const auto& b = out.exponents[static_cast<std::size_t>(i - 1)];
      if (b.is_zero()) continue;
      value -= b.adams(k / i) * MotivicClass(i);
    }
    out.exponents[static_cast<std::size_t>(k - 1)] = value / MotivicClass(k);
  }
  return out;
}

ExponentVector euler_factorize_reference(const TruncatedSeries& a) {
  require_unit_constant(a);
  const int n = a.order();
  ExponentVector out{n, std::vector<MotivicClass>(static_cast<std::size_t>(n))};
  TruncatedSeries remainder = a;
  for (int i = 1; i <= n; ++i) {
    const MotivicClass b = remainder[i];
    out.exponents[static_cast<std::size_t>(i - 1)] = b;
    if (i < n && !b.is_zero()) remainder = multiply_serial(remainder, expand_factor(i, -b, n));
  }
  return out;
}

TruncatedSeries expand_factor(int i, const MotivicClass& b, int order) {
  if (i < 1) throw InvalidArgument("factor index must be >= 1");
  if (order < 0) throw InvalidArgument("series order must be nonnegative");
  const MotivicPolynomial exponent = require_polynomial_exponent(b, i);
  const int count = order / i;
  auto result = TruncatedSeries::one(order);
  for (const auto& term : exponent.terms()) {
    // (1 - L^k T^i)^(-n_k) = sum_j C(n_k + j - 1, j) L^(k j) T^(i j)
    const auto row = negative_binomial_row(term.coefficient, count);
    std::vector<MotivicClass> factor(static_cast<std::size_t>(order) + 1);
    for (int j = 0; j <= count; ++j) {
      factor[static_cast<std::size_t>(i * j)] =
          MotivicPolynomial::monomial(row[static_cast<std::size_t>(j)], term.exponent * j);
    }
    result = multiply_serial(result, TruncatedSeries(std::move(factor)));
  }
  return result;
}

TruncatedSeries expand(const ExponentVector& factors) {
  auto result = TruncatedSeries::one(factors.order);
  for (int i = 1; i <= factors.order; ++i) {
    if (factors.b(i).is_zero()) continue;
    result = result * expand_factor(i, factors.b(i), factors.order);
  }
  return result;
}

TruncatedSeries power(const TruncatedSeries& a, const MotivicClass& exponent) {
  const auto factors = euler_factorize(a);
  const int n = a.order();

  std::vector<MotivicPolynomial> scaled(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) {
    scaled[static_cast<std::size_t>(i)] = require_polynomial_exponent(factors.b(i) * exponent, i);
  }

  // Ghost components of the result: Q_k = sum_{i | k} i * psi_{k/i}(b_i * M).
  std::vector<MotivicPolynomial> ghost(static_cast<std::size_t>(n) + 1);
#pragma omp parallel for schedule(dynamic, 1)
  for (int k = 1; k <= n; ++k) {
    MotivicPolynomial q;
    for (int i = 1; i <= k; ++i) {
      if (k % i != 0) continue;
      const auto& e = scaled[static_cast<std::size_t>(i)];
      if (e.is_zero()) continue;
      auto term = e.adams(k / i);
      term *= mpz_class(i);
      q += term;
    }
    ghost[static_cast<std::size_t>(k)] = std::move(q);
  }

  // k f_k = sum_{t=1}^k Q_t f_{k-t}; the division is exact over Z.
  std::vector<MotivicPolynomial> f(static_cast<std::size_t>(n) + 1);
  f[0] = 1;
  for (int k = 1; k <= n; ++k) {
    MotivicPolynomial sum;
    for (int t = 1; t <= k; ++t) {
      const auto& q = ghost[static_cast<std::size_t>(t)];
      const auto& prev = f[static_cast<std::size_t>(k - t)];
      if (q.is_zero() || prev.is_zero()) continue;
      sum += q * prev;
    }
    f[static_cast<std::size_t>(k)] = sum.divided_exactly(k);
  }
  return TruncatedSeries(std::vector<MotivicClass>(f.begin(), f.end()));
}

TruncatedSeries power_reference(const TruncatedSeries& a, const MotivicClass& exponent) {
  const auto factors = euler_factorize_reference(a);
  const int n = a.order();
  auto result = TruncatedSeries::one(n);
  for (int i = 1; i <= n; ++i) {
    const MotivicClass e = factors.b(i) * exponent;
    require_polynomial_exponent(e, i);
    if (e.is_zero()) continue;
    result = multiply_serial(result, expand_factor(i, e, n));
  }
  return result;
}

std::vector<PartitionVector> enumerate_partition_vectors(int k, int r, int max_size) {
  if (k < 0) throw InvalidArgument("partition weight must be nonnegative");
  std::vector<PartitionVector> out;
  if (max_size < 0) return out;
  const int colours = std::min(r, k);
  std::vector<int> current(static_cast<std::size_t>(std::max(colours, 0)), 0);

  std::function<void(int, int, int)> recurse = [&](int i, int remaining, int budget) {
    if (remaining == 0) {
      PartitionVector v{std::vector<int>(current.begin(), current.begin() + (i - 1))};
      while (!v.multiplicities.empty() && v.multiplicities.back() == 0) v.multiplicities.pop_back();
      out.push_back(std::move(v));
      return;
    }
    if (i > colours) return;
    for (int count = std::min(remaining / i, budget); count >= 0; --count) {
      current[static_cast<std::size_t>(i - 1)] = count;
      recurse(i + 1, remaining - count * i, budget - count);
    }
    current[static_cast<std::size_t>(i - 1)] = 0;
  };
  recurse(1, k, max_size);
  return out;
}

TruncatedSeries power_finite(std::span<const long> a, int m, int order) {
  if (m < 0) throw InvalidArgument("number of points must be nonnegative");
  if (order < 0) throw InvalidArgument("series order must be nonnegative");
  const int r = static_cast<int>(a.size());
  std::vector<MotivicClass> out(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) {
    mpz_class total = 0;
    for (const auto& v : enumerate_partition_vectors(k, r, m)) {
      // m! / ((m - s)! prod k_i!) ordered injections of colour classes into M
      mpz_class term = 1;
      const int s = v.size();
      for (int t = 0; t < s; ++t) term *= m - t;
      for (int i = 1; i <= static_cast<int>(v.multiplicities.size()); ++i) {
        mpz_class factorial;
        mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(v[i]));
        mpz_divexact(term.get_mpz_t(), term.get_mpz_t(), factorial.get_mpz_t());
        mpz_class base = a[static_cast<std::size_t>(i - 1)];
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(v[i]));
        term *= p;
      }
      total += term;
    }
    out[static_cast<std::size_t>(k)] = total;
  }
  return TruncatedSeries(std::move(out));
}

}  // namespace motivic
