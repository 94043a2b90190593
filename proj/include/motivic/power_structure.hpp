#pragma once

#include <span>
#include <string>
#include <vector>

#include "motivic/motivic_class.hpp"
#include "motivic/series.hpp"

namespace motivic {

/// Exponents b_1..b_N of the factorization prod_i (1 - T^i)^(-b_i).
struct ExponentVector {
  int order = 0;
  std::vector<MotivicClass> exponents;  // exponents[i - 1] is b_i

  const MotivicClass& b(int i) const { return exponents.at(static_cast<std::size_t>(i - 1)); }
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
};

/// k_i points of colour i, i = 1..r; trailing zeros are not stored.
struct PartitionVector {
  std::vector<int> multiplicities;

  /// sum i * k_i
  int weight() const;
  /// sum k_i
  int size() const;
  /// k_i, zero past the stored length.
  int operator[](int i) const;
  friend bool operator==(const PartitionVector&, const PartitionVector&) = default;
};

/// Text form `[k1,k2,...]`.
std::string to_string(const PartitionVector& v);

/// Euler-factor form of A, which must have constant term 1.
///
/// Reads the ghost components of T*A'/A and peels off Adams operations:
/// k*b_k = P_k - sum_{i | k, i < k} i * psi_{k/i}(b_i). Works over the
/// whole fraction field.
ExponentVector euler_factorize(const TruncatedSeries& a);

/// Same factorization by the running-remainder algorithm: b_i is the T^i
/// coefficient of the remainder, which is then multiplied by
/// expand_factor(i, -b_i). Every b_i except the last must be a Laurent
/// polynomial over Z.
ExponentVector euler_factorize_reference(const TruncatedSeries& a);

/// (1 - T^i)^(-b) mod T^(order+1) for b = sum_k n_k L^k, expanded as
/// prod_k (1 - L^k T^i)^(-n_k) with binomial series. Throws
/// UnsupportedExponent unless b is a Laurent polynomial over Z.
TruncatedSeries expand_factor(int i, const MotivicClass& b, int order);

/// prod_i expand_factor(i, b_i, order).
TruncatedSeries expand(const ExponentVector& factors);

/// (A(T))^M through the Euler-factor form. Requires A(0) = 1 and every
/// b_i * M in Z[L, 1/L]; otherwise UnsupportedExponent names the factor.
/// Uses the ghost-component recurrence; the per-degree ghost terms are
/// computed in parallel.
TruncatedSeries power(const TruncatedSeries& a, const MotivicClass& exponent);

/// Serial reference for power: prod_i expand_factor(i, b_i * M) with the
/// running-remainder factorization.
TruncatedSeries power_reference(const TruncatedSeries& a, const MotivicClass& exponent);

/// (1 + a_1 T + ... + a_r T^r)^M for M a set of m points, counted orbit by
/// orbit: the T^k coefficient is
///   sum over {k_i} with sum i k_i = k, sum k_i <= m of
///   m! / ((m - sum k_i)! prod k_i!) * prod a_i^k_i.
TruncatedSeries power_finite(std::span<const long> a, int m, int order);

/// All {k_i} with sum i*k_i = k, i <= r and sum k_i <= max_size, in
/// lexicographically decreasing order of (k_1, k_2, ...).
std::vector<PartitionVector> enumerate_partition_vectors(int k, int r, int max_size);

}  // namespace motivic
