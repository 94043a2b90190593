#pragma once

#include <gmpxx.h>

#include <utility>

#include "motivic/polynomial.hpp"

namespace motivic {

/// A motivic class as a reduced fraction of Laurent polynomials in L.
///
/// Canonical form: the numerator and denominator share no common factor
/// over Q and no common integer content; the denominator is an ordinary
/// polynomial with nonzero constant term and positive leading coefficient.
/// Zero is 0/1. Equality of canonical forms is equality of classes.
class MotivicClass {
 public:
  MotivicClass() : denominator_(1) {}
  MotivicClass(long constant);  // NOLINT(google-explicit-constructor)
  MotivicClass(const mpz_class& constant);  // NOLINT(google-explicit-constructor)
  MotivicClass(MotivicPolynomial polynomial);  // NOLINT(google-explicit-constructor)
  /// Reduces numerator / denominator; throws DivisionByZero on a zero denominator.
  MotivicClass(const MotivicPolynomial& numerator, const MotivicPolynomial& denominator);

  /// L^e
  static MotivicClass lefschetz(int e = 1) { return MotivicPolynomial::lefschetz(e); }

  const MotivicPolynomial& numerator() const noexcept { return numerator_; }
  const MotivicPolynomial& denominator() const noexcept { return denominator_; }

  bool is_zero() const noexcept { return numerator_.is_zero(); }
  bool is_one() const { return numerator_.is_one() && denominator_.is_one(); }
  /// True when the class lies in Z[L, 1/L].
  bool is_laurent_polynomial() const { return denominator_.is_one(); }

  /// L -> L^j applied to numerator and denominator.
  MotivicClass adams(int j) const;

  MotivicClass operator-() const;
  MotivicClass& operator+=(const MotivicClass& rhs);
  MotivicClass& operator-=(const MotivicClass& rhs);
  MotivicClass& operator*=(const MotivicClass& rhs);
  MotivicClass& operator/=(const MotivicClass& rhs);

  friend MotivicClass operator+(MotivicClass a, const MotivicClass& b) { return a += b; }
  friend MotivicClass operator-(MotivicClass a, const MotivicClass& b) { return a -= b; }
  friend MotivicClass operator*(MotivicClass a, const MotivicClass& b) { return a *= b; }
  friend MotivicClass operator/(MotivicClass a, const MotivicClass& b) { return a /= b; }
  friend bool operator==(const MotivicClass&, const MotivicClass&) = default;

 private:
  struct Reduced {};
  MotivicClass(MotivicPolynomial numerator, MotivicPolynomial denominator, Reduced)
      : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {}

  MotivicPolynomial numerator_;
  MotivicPolynomial denominator_;
};

MotivicClass pow(const MotivicClass& base, int exponent);

/// Exact value under L -> q. Throws PoleError when the denominator vanishes
/// at q, or when q = 0 meets a negative power of L.
mpq_class eval_at(const MotivicClass& a, const mpz_class& q);

/// Membership in the Grothendieck semiring image: a Laurent polynomial
/// with all coefficients nonnegative.
bool is_effective(const MotivicClass& a);

/// gcd over Q of two ordinary polynomials (nonnegative exponents), made
/// primitive over Z with positive leading coefficient.
MotivicPolynomial polynomial_gcd(const MotivicPolynomial& a, const MotivicPolynomial& b);

}  // namespace motivic
