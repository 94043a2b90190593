#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "motivic/motivic_class.hpp"

namespace motivic {

/// Weakly decreasing positive parts. Indexes a Schubert cell of Gr(m, N)
/// when it has at most m parts and largest part at most N - m.
struct Partition {
  std::vector<int> parts;

  int weight() const;
  int length() const { return static_cast<int>(parts.size()); }
  int largest() const { return parts.empty() ? 0 : parts.front(); }
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Multiplicities (i_1, i_2, ...) naming the stratum prod_j S^{i_j} C^j of
/// S^m CP^infinity. Trailing zeros are not stored.
struct StrataSignature {
  std::vector<int> multiplicities;

  /// sum j * i_j
  int dimension() const;
  /// sum i_j, the number of points away from C^0.
  int size() const;
  int operator[](int j) const;
  friend bool operator==(const StrataSignature&, const StrataSignature&) = default;
};

/// `(p1,p2,...)`, `()` for the empty partition.
std::string to_string(const Partition& p);
/// `[i1,i2,...]`, `[]` for the point stratum.
std::string to_string(const StrataSignature& s);

/// L^n
MotivicClass affine_class(int n);
/// 1 + L + ... + L^N
MotivicClass projective_class(int n);

/// prod_{i=1..m} (L^{N-m+i} - 1)/(L^i - 1), divided exactly.
MotivicClass gaussian_binomial(int n, int m);

/// Partitions inside the m x (N - m) box, ordered by weight and then
/// lexicographically decreasing.
std::vector<Partition> schubert_cells(int m, int n);

/// Cells of dimension n in Gr(m, inf): partitions of n into at most m
/// parts, lexicographically decreasing.
std::vector<Partition> schubert_cells_of_dimension(int m, int n);

/// Sum over Schubert cells of L^{|lambda|}.
MotivicClass grassmannian_class(int m, int n);

/// Partitions of n with every part <= m (cells of dimension n in Gr(m, inf)).
std::uint64_t count_partitions_bounded_part(int n, int m);
/// Partitions of n into at most m parts (the conjugate count).
std::uint64_t count_partitions_bounded_length(int n, int m);
/// Cells of dimension n in Gr(m, inf). Computes both conjugate counts and
/// throws std::logic_error should they disagree.
std::uint64_t schubert_count(int m, int n);

/// Signatures with sum i_j <= m and sum j * i_j = n, lexicographically
/// decreasing in (i_1, i_2, ...).
std::vector<StrataSignature> strata_signatures(int m, int n);

/// Signature -> the partition with i_j parts equal to j, in signature order.
Partition partition_of(const StrataSignature& s);
std::vector<std::pair<StrataSignature, Partition>> match_strata(int m, int n);

/// Smallest N with the stratum inside S^m P^N: max{j : i_j > 0}.
int stratum_min_level(const StrataSignature& s);
/// Smallest N with the cell inside Gr(m, N): m + lambda_1.
int cell_min_level(const Partition& lambda, int m);

}  // namespace motivic
