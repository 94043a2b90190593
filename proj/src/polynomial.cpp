#include "motivic/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "motivic/errors.hpp"

namespace motivic {

namespace {

int checked_exponent(long long e) {
  if (e > std::numeric_limits<int>::max() || e < std::numeric_limits<int>::min()) {
    throw std::overflow_error("exponent of L out of range");
  }
  return static_cast<int>(e);
}

// Merges two ascending term lists; sign is +1 or -1 for the right operand.
std::vector<MotivicPolynomial::Term> merge_terms(const std::vector<MotivicPolynomial::Term>& a,
                                                 const std::vector<MotivicPolynomial::Term>& b,
                                                 int sign) {
  std::vector<MotivicPolynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exponent < b[j].exponent)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exponent < a[i].exponent) {
      out.push_back({b[j].exponent, sign > 0 ? b[j].coefficient : mpz_class(-b[j].coefficient)});
      ++j;
    } else {
      mpz_class c = sign > 0 ? mpz_class(a[i].coefficient + b[j].coefficient)
                             : mpz_class(a[i].coefficient - b[j].coefficient);
      if (c != 0) out.push_back({a[i].exponent, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MotivicPolynomial::MotivicPolynomial(long constant) {
  if (constant != 0) terms_.push_back({0, mpz_class(constant)});
}

MotivicPolynomial::MotivicPolynomial(const mpz_class& constant) {
  if (constant != 0) terms_.push_back({0, constant});
}

MotivicPolynomial MotivicPolynomial::monomial(const mpz_class& c, int e) {
  if (c == 0) return {};
  return MotivicPolynomial(std::vector<Term>{{e, c}});
}

MotivicPolynomial MotivicPolynomial::lefschetz(int e) { return monomial(1, e); }

MotivicPolynomial MotivicPolynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.exponent < y.exponent; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exponent == t.exponent) {
      out.back().coefficient += t.coefficient;
    } else {
      if (!out.empty() && out.back().coefficient == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coefficient == 0) out.pop_back();
  return MotivicPolynomial(std::move(out));
}

bool MotivicPolynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].exponent == 0 && terms_[0].coefficient == 1;
}

int MotivicPolynomial::low_exponent() const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no exponents");
  return terms_.front().exponent;
}

int MotivicPolynomial::high_exponent() const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no exponents");
  return terms_.back().exponent;
}

const mpz_class& MotivicPolynomial::leading_coefficient() const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading coefficient");
  return terms_.back().coefficient;
}

mpz_class MotivicPolynomial::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == exponent) return it->coefficient;
  return 0;
}

mpz_class MotivicPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coefficient.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

MotivicPolynomial MotivicPolynomial::shifted(int k) const {
  auto out = terms_;
  for (auto& t : out) t.exponent = checked_exponent(static_cast<long long>(t.exponent) + k);
  return MotivicPolynomial(std::move(out));
}

MotivicPolynomial MotivicPolynomial::adams(int j) const {
  if (j < 1) throw InvalidArgument("Adams operation needs j >= 1");
  auto out = terms_;
  for (auto& t : out) t.exponent = checked_exponent(static_cast<long long>(t.exponent) * j);
  return MotivicPolynomial(std::move(out));
}

MotivicPolynomial MotivicPolynomial::divided_exactly(const mpz_class& d) const {
  if (d == 0) throw DivisionByZero();
  auto out = terms_;
  for (auto& t : out) {
    if (!mpz_divisible_p(t.coefficient.get_mpz_t(), d.get_mpz_t())) {
      throw InvalidArgument("inexact integer division of polynomial");
    }
    mpz_divexact(t.coefficient.get_mpz_t(), t.coefficient.get_mpz_t(), d.get_mpz_t());
  }
  return MotivicPolynomial(std::move(out));
}

mpq_class MotivicPolynomial::evaluate(const mpq_class& x) const {
  if (terms_.empty()) return 0;
  if (x == 0) {
    if (terms_.front().exponent < 0) throw PoleError("negative power of L evaluated at 0");
    return mpq_class(coefficient(0));
  }
  // Horner over exponent gaps gives p(x) / x^low; rescale afterwards.
  const int low = terms_.front().exponent;
  mpq_class acc = 0;
  int current = terms_.back().exponent;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (; current > it->exponent; --current) acc *= x;
    acc += it->coefficient;
  }
  mpq_class scale = 1;
  mpq_class base = low >= 0 ? x : mpq_class(1 / x);
  for (int k = 0, n = low >= 0 ? low : -low; k < n; ++k) scale *= base;
  acc *= scale;
  acc.canonicalize();
  return acc;
}

MotivicPolynomial MotivicPolynomial::operator-() const {
  auto out = terms_;
  for (auto& t : out) t.coefficient = -t.coefficient;
  return MotivicPolynomial(std::move(out));
}

MotivicPolynomial& MotivicPolynomial::operator+=(const MotivicPolynomial& rhs) {
  if (rhs.terms_.empty()) return *this;
  if (terms_.empty()) return *this = rhs;
  terms_ = merge_terms(terms_, rhs.terms_, +1);
  return *this;
}

MotivicPolynomial& MotivicPolynomial::operator-=(const MotivicPolynomial& rhs) {
  if (rhs.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, rhs.terms_, -1);
  return *this;
}

MotivicPolynomial& MotivicPolynomial::operator*=(const MotivicPolynomial& rhs) {
  return *this = *this * rhs;
}

MotivicPolynomial& MotivicPolynomial::operator*=(const mpz_class& rhs) {
  if (rhs == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coefficient *= rhs;
  }
  return *this;
}

MotivicPolynomial operator*(const MotivicPolynomial& a, const MotivicPolynomial& b) {
  using Term = MotivicPolynomial::Term;
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_monomial()) {
    auto out = a.shifted(b.terms_[0].exponent);
    out *= b.terms_[0].coefficient;
    return out;
  }
  if (a.is_monomial()) return b * a;

  const long long low = static_cast<long long>(a.terms_.front().exponent) + b.terms_.front().exponent;
  const long long high = static_cast<long long>(a.terms_.back().exponent) + b.terms_.back().exponent;
  checked_exponent(low);
  checked_exponent(high);
  const long long span = high - low + 1;
  const long long products = static_cast<long long>(a.size()) * static_cast<long long>(b.size());

  std::vector<Term> out;
  if (span <= 4 * products + 64) {
    std::vector<mpz_class> acc(static_cast<std::size_t>(span));
    for (const auto& x : a.terms_) {
      for (const auto& y : b.terms_) {
        auto& slot = acc[static_cast<std::size_t>(x.exponent + y.exponent - low)];
        mpz_addmul(slot.get_mpz_t(), x.coefficient.get_mpz_t(), y.coefficient.get_mpz_t());
      }
    }
    for (long long k = 0; k < span; ++k) {
      if (acc[static_cast<std::size_t>(k)] != 0) {
        out.push_back({static_cast<int>(low + k), std::move(acc[static_cast<std::size_t>(k)])});
      }
    }
  } else {
    std::map<int, mpz_class> acc;
    for (const auto& x : a.terms_) {
      for (const auto& y : b.terms_) {
        auto& slot = acc[x.exponent + y.exponent];
        mpz_addmul(slot.get_mpz_t(), x.coefficient.get_mpz_t(), y.coefficient.get_mpz_t());
      }
    }
    for (auto& [e, c] : acc) {
      if (c != 0) out.push_back({e, std::move(c)});
    }
  }
  return MotivicPolynomial(std::move(out));
}

MotivicPolynomial pow(const MotivicPolynomial& base, int exponent) {
  if (exponent < 0) throw InvalidArgument("negative power of a Laurent polynomial");
  MotivicPolynomial result = 1;
  MotivicPolynomial square = base;
  while (exponent != 0) {
    if (exponent & 1) result *= square;
    exponent >>= 1;
    if (exponent != 0) square *= square;
  }
  return result;
}

}  // namespace motivic
