#pragma once

#include <cstdint>
#include <vector>

namespace motivic {

/// F_{p^k} for the handful of tiny fields the brute-force oracle needs:
/// F_2, F_3 and
///   F_4 = F_2[x]/(x^2 + x + 1),  F_8 = F_2[x]/(x^3 + x + 1),
///   F_9 = F_3[x]/(x^2 + 1),      F_27 = F_3[x]/(x^3 + 2x + 1).
/// Elements are integers 0..p^k - 1 whose base-p digits are the
/// coefficients of 1, x, x^2.
class GaloisField {
 public:
  GaloisField(int characteristic, int degree);

  int characteristic() const noexcept { return p_; }
  int degree() const noexcept { return k_; }
  int size() const noexcept { return size_; }
  /// Modulus coefficients, constant term first, monic.
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  int add(int a, int b) const { return add_[index(a, b)]; }
  int mul(int a, int b) const { return mul_[index(a, b)]; }
  int neg(int a) const;
  int power(int a, std::uint64_t e) const;
  /// x -> x^p
  int frobenius(int a) const { return power(a, static_cast<std::uint64_t>(p_)); }
  /// True when a lies in the subfield F_{p^e}, i.e. a^{p^e} = a.
  bool in_subfield(int a, int e) const;

 private:
  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(b);
  }

  int p_;
  int k_;
  int size_;
  std::vector<int> modulus_;
  std::vector<int> add_;
  std::vector<int> mul_;
};

}  // namespace motivic
