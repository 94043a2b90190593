#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace motivic {

/// Laurent polynomial in the Lefschetz class L with arbitrary-precision
/// integer coefficients.
///
/// Terms are kept sorted by ascending exponent with no zero coefficients and
/// no repeated exponents, so structural equality is semantic equality.
class MotivicPolynomial {
 public:
  struct Term {
    int exponent;
    mpz_class coefficient;

    friend bool operator==(const Term&, const Term&) = default;
  };

  MotivicPolynomial() = default;
  MotivicPolynomial(long constant);  // NOLINT(google-explicit-constructor)
  MotivicPolynomial(const mpz_class& constant);  // NOLINT(google-explicit-constructor)

  /// c * L^e
  static MotivicPolynomial monomial(const mpz_class& c, int e);
  /// L^e
  static MotivicPolynomial lefschetz(int e = 1);
  /// Builds from arbitrary terms; merges duplicates and drops zeros.
  static MotivicPolynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent == 0);
  }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  // Exponent bounds; zero polynomial has neither.
  int low_exponent() const;
  int high_exponent() const;
  const mpz_class& leading_coefficient() const;
  mpz_class coefficient(int exponent) const;

  /// gcd of all coefficients (nonnegative; 0 for the zero polynomial).
  mpz_class content() const;

  /// this * L^k
  MotivicPolynomial shifted(int k) const;
  /// L -> L^j, the Adams operation on cellular classes. Requires j >= 1.
  MotivicPolynomial adams(int j) const;
  /// Divides every coefficient by d; d must divide all of them.
  MotivicPolynomial divided_exactly(const mpz_class& d) const;

  /// Exact value at L = x. Throws PoleError at x = 0 with negative powers.
  mpq_class evaluate(const mpq_class& x) const;

  MotivicPolynomial operator-() const;
  MotivicPolynomial& operator+=(const MotivicPolynomial& rhs);
  MotivicPolynomial& operator-=(const MotivicPolynomial& rhs);
  MotivicPolynomial& operator*=(const MotivicPolynomial& rhs);
  MotivicPolynomial& operator*=(const mpz_class& rhs);

  friend MotivicPolynomial operator+(MotivicPolynomial a, const MotivicPolynomial& b) {
    return a += b;
  }
  friend MotivicPolynomial operator-(MotivicPolynomial a, const MotivicPolynomial& b) {
    return a -= b;
  }
  friend MotivicPolynomial operator*(const MotivicPolynomial& a, const MotivicPolynomial& b);
  friend bool operator==(const MotivicPolynomial&, const MotivicPolynomial&) = default;

 private:
  explicit MotivicPolynomial(std::vector<Term> sorted_terms)
      : terms_(std::move(sorted_terms)) {}

  std::vector<Term> terms_;
};

// Throws InvalidArgument for a negative exponent.
MotivicPolynomial pow(const MotivicPolynomial& base, int exponent);

}  // namespace motivic
