#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "motivic/motivic_class.hpp"

namespace motivic {

/// Power series in T known modulo T^(order+1), with class coefficients.
///
/// Exactly order+1 coefficients are stored. Binary operations on series of
/// different orders truncate to the smaller order.
class TruncatedSeries {
 public:
  /// Coefficients c_0..c_N; the order is N. Must be nonempty.
  explicit TruncatedSeries(std::vector<MotivicClass> coefficients);

  static TruncatedSeries constant(const MotivicClass& c, int order);
  static TruncatedSeries one(int order) { return constant(1, order); }
  /// The series T.
  static TruncatedSeries variable(int order);
  /// 1 + T + T^2 + ...
  static TruncatedSeries geometric(int order);
  /// Polynomial in T given by its coefficients, padded or cut to `order`.
  static TruncatedSeries from_polynomial(std::span<const MotivicClass> coefficients, int order);

  int order() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  std::span<const MotivicClass> coefficients() const noexcept { return coefficients_; }
  /// c_k; throws InvalidArgument when k > order.
  const MotivicClass& coefficient(int k) const;
  const MotivicClass& operator[](int k) const { return coefficients_[static_cast<std::size_t>(k)]; }

  TruncatedSeries truncated(int order) const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<MotivicClass> coefficients_;
};

/// Product computed with the serial reference kernel.
TruncatedSeries multiply_serial(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse mod T^(order+1); c_0 must be nonzero.
TruncatedSeries invert(const TruncatedSeries& a);

/// T -> c * T^step, truncated at the original order. step >= 1.
TruncatedSeries substitute(const TruncatedSeries& a, const MotivicClass& c, int step);

/// Integer power; negative exponents go through invert.
TruncatedSeries pow(const TruncatedSeries& a, long exponent);

/// Text form `1 + L*T + L^2*T^2 + O(T^3)`. On input `O(T^k)` declares order
/// k - 1; without it `order` must be given. When both are present the
/// smaller order wins.
TruncatedSeries parse_series(std::string_view text, std::optional<int> order = std::nullopt);
std::string format_series(const TruncatedSeries& a);

}  // namespace motivic
