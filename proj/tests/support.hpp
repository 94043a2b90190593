#pragma once

#include <doctest.h>

#include <map>
#include <random>
#include <string>
#include <vector>

#include "motivic/motivic_class.hpp"
#include "motivic/polynomial.hpp"
#include "motivic/series.hpp"
#include "motivic/text.hpp"

namespace doctest {
template <>
struct StringMaker<motivic::MotivicPolynomial> {
  static String convert(const motivic::MotivicPolynomial& p) { return motivic::format_polynomial(p).c_str(); }
};
template <>
struct StringMaker<motivic::MotivicClass> {
  static String convert(const motivic::MotivicClass& c) { return motivic::format_class(c).c_str(); }
};
template <>
struct StringMaker<motivic::TruncatedSeries> {
  static String convert(const motivic::TruncatedSeries& s) { return motivic::format_series(s).c_str(); }
};
template <>
struct StringMaker<mpz_class> {
  static String convert(const mpz_class& z) { return z.get_str().c_str(); }
};
template <>
struct StringMaker<mpq_class> {
  static String convert(const mpq_class& z) { return z.get_str().c_str(); }
};
}  // namespace doctest

namespace testing {

using motivic::MotivicClass;
using motivic::MotivicPolynomial;
using motivic::TruncatedSeries;

inline MotivicPolynomial Lp(int e = 1) { return MotivicPolynomial::lefschetz(e); }
inline MotivicClass L(int e = 1) { return MotivicClass::lefschetz(e); }
inline MotivicClass C(const char* text) { return motivic::parse_class(text); }
inline TruncatedSeries S(const char* text) { return motivic::parse_series(text); }

inline int draw(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Up to `terms` terms c*L^e, e in [lo, hi], |c| <= max_coeff (may collide).
inline MotivicPolynomial random_polynomial(std::mt19937_64& rng, int terms = 4, int lo = -3, int hi = 3,
                                           int max_coeff = 5) {
  std::vector<MotivicPolynomial::Term> out;
  const int n = draw(rng, 0, terms);
  for (int i = 0; i < n; ++i) out.push_back({draw(rng, lo, hi), draw(rng, -max_coeff, max_coeff)});
  return MotivicPolynomial::from_terms(std::move(out));
}

inline MotivicPolynomial random_nonzero_polynomial(std::mt19937_64& rng, int terms = 3, int lo = -2, int hi = 3) {
  for (;;) {
    auto p = random_polynomial(rng, terms, lo, hi, 4);
    if (!p.is_zero()) return p;
  }
}

inline MotivicClass random_fraction(std::mt19937_64& rng) {
  return {random_polynomial(rng, 3, -2, 3, 4), random_nonzero_polynomial(rng)};
}

inline TruncatedSeries random_series(std::mt19937_64& rng, int order, bool unit = true) {
  std::vector<MotivicClass> c;
  for (int k = 0; k <= order; ++k) c.emplace_back(random_polynomial(rng, 3, -2, 2, 3));
  if (unit) c[0] = 1;
  return TruncatedSeries(std::move(c));
}

// Naive reference: coefficients keyed by exponent, no shared code with the
// library's multiplication.
inline std::map<int, mpz_class> as_map(const MotivicPolynomial& p) {
  std::map<int, mpz_class> out;
  for (const auto& t : p.terms()) out[t.exponent] = t.coefficient;
  return out;
}

inline std::map<int, mpz_class> naive_product(const MotivicPolynomial& a, const MotivicPolynomial& b) {
  std::map<int, mpz_class> out;
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) out[x.exponent + y.exponent] += x.coefficient * y.coefficient;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// sum c * x^e computed term by term.
inline mpq_class naive_eval(const MotivicPolynomial& p, const mpq_class& x) {
  mpq_class sum = 0;
  for (const auto& t : p.terms()) {
    mpq_class power = 1;
    for (int i = 0; i < std::abs(t.exponent); ++i) power *= x;
    if (t.exponent < 0) power = 1 / power;
    sum += t.coefficient * power;
  }
  return sum;
}

}  // namespace testing
