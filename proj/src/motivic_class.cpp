#include "motivic/motivic_class.hpp"

#include <limits>
#include <vector>

#include "motivic/errors.hpp"

namespace motivic {

namespace {

// Dense polynomial over Q, index = degree, no trailing zeros.
using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_dense(const MotivicPolynomial& p) {
  if (p.is_zero()) return {};
  QPoly out(static_cast<std::size_t>(p.high_exponent()) + 1);
  for (const auto& t : p.terms()) out[static_cast<std::size_t>(t.exponent)] = t.coefficient;
  return out;
}

// Requires integer coefficients.
MotivicPolynomial from_dense_integral(const QPoly& p) {
  std::vector<MotivicPolynomial::Term> terms;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    if (p[i].get_den() != 1) throw Error("internal: non-integral quotient after gcd cancellation");
    terms.push_back({static_cast<int>(i), p[i].get_num()});
  }
  return MotivicPolynomial::from_terms(std::move(terms));
}

// Clears denominators and content; positive leading coefficient.
MotivicPolynomial primitive_part(const QPoly& p) {
  mpz_class lcm = 1;
  for (const auto& c : p) {
    if (c != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  QPoly scaled = p;
  for (auto& c : scaled) c *= lcm;
  auto integral = from_dense_integral(scaled);
  if (integral.is_zero()) return integral;
  auto g = integral.content();
  if (integral.leading_coefficient() < 0) g = -g;
  return integral.divided_exactly(g);
}

// Long division a = q*b + r over Q.
void divide(const QPoly& a, const QPoly& b, QPoly& quotient, QPoly& remainder) {
  remainder = a;
  quotient.clear();
  if (remainder.size() < b.size()) return;
  quotient.assign(remainder.size() - b.size() + 1, mpq_class(0));
  const mpq_class& lead = b.back();
  for (std::size_t k = remainder.size(); k-- >= b.size();) {
    if (remainder[k] == 0) continue;
    mpq_class factor = remainder[k] / lead;
    const std::size_t shift = k - (b.size() - 1);
    quotient[shift] = factor;
    for (std::size_t j = 0; j < b.size(); ++j) remainder[shift + j] -= factor * b[j];
  }
  trim(quotient);
  trim(remainder);
}

MotivicPolynomial divide_exact(const MotivicPolynomial& a, const MotivicPolynomial& b) {
  QPoly quotient;
  QPoly remainder;
  divide(to_dense(a), to_dense(b), quotient, remainder);
  if (!remainder.empty()) throw Error("internal: inexact polynomial division");
  return from_dense_integral(quotient);
}

}  // namespace

MotivicPolynomial polynomial_gcd(const MotivicPolynomial& a, const MotivicPolynomial& b) {
  QPoly x = to_dense(a);
  QPoly y = to_dense(b);
  while (!y.empty()) {
    QPoly quotient;
    QPoly remainder;
    divide(x, y, quotient, remainder);
    x = std::move(y);
    y = std::move(remainder);
  }
  return primitive_part(x);
}

MotivicClass::MotivicClass(long constant) : numerator_(constant), denominator_(1) {}

MotivicClass::MotivicClass(const mpz_class& constant) : numerator_(constant), denominator_(1) {}

MotivicClass::MotivicClass(MotivicPolynomial polynomial)
    : numerator_(std::move(polynomial)), denominator_(1) {}

MotivicClass::MotivicClass(const MotivicPolynomial& numerator, const MotivicPolynomial& denominator) {
  if (denominator.is_zero()) throw DivisionByZero();
  if (numerator.is_zero()) {
    denominator_ = 1;
    return;
  }
  // Pull out powers of L: they are units of the Laurent ring.
  const int shift = numerator.low_exponent() - denominator.low_exponent();
  MotivicPolynomial num = numerator.shifted(-numerator.low_exponent());
  MotivicPolynomial den = denominator.shifted(-denominator.low_exponent());

  if (!den.is_constant()) {
    auto g = polynomial_gcd(num, den);
    if (!g.is_constant()) {
      num = divide_exact(num, g);
      den = divide_exact(den, g);
    }
  }
  mpz_class content = num.content();
  mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), den.content().get_mpz_t());
  if (den.leading_coefficient() < 0) content = -content;
  if (content != 1) {
    num = num.divided_exactly(content);
    den = den.divided_exactly(content);
  }
  numerator_ = num.shifted(shift);
  denominator_ = std::move(den);
}

MotivicClass MotivicClass::adams(int j) const {
  if (is_laurent_polynomial()) return MotivicClass(numerator_.adams(j));
  return MotivicClass(numerator_.adams(j), denominator_.adams(j));
}

MotivicClass MotivicClass::operator-() const {
  return MotivicClass(-numerator_, denominator_, Reduced{});
}

MotivicClass& MotivicClass::operator+=(const MotivicClass& rhs) {
  if (is_laurent_polynomial() && rhs.is_laurent_polynomial()) {
    numerator_ += rhs.numerator_;
  } else if (denominator_ == rhs.denominator_) {
    *this = MotivicClass(numerator_ + rhs.numerator_, denominator_);
  } else {
    *this = MotivicClass(numerator_ * rhs.denominator_ + rhs.numerator_ * denominator_,
                         denominator_ * rhs.denominator_);
  }
  return *this;
}

MotivicClass& MotivicClass::operator-=(const MotivicClass& rhs) { return *this += -rhs; }

MotivicClass& MotivicClass::operator*=(const MotivicClass& rhs) {
  if (is_laurent_polynomial() && rhs.is_laurent_polynomial()) {
    numerator_ *= rhs.numerator_;
  } else {
    *this = MotivicClass(numerator_ * rhs.numerator_, denominator_ * rhs.denominator_);
  }
  return *this;
}

MotivicClass& MotivicClass::operator/=(const MotivicClass& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  *this = MotivicClass(numerator_ * rhs.denominator_, denominator_ * rhs.numerator_);
  return *this;
}

MotivicClass pow(const MotivicClass& base, int exponent) {
  if (exponent >= 0) {
    return MotivicClass(pow(base.numerator(), exponent),
                        pow(base.denominator(), exponent));
  }
  if (base.is_zero()) throw DivisionByZero();
  if (exponent == std::numeric_limits<int>::min()) throw InvalidArgument("exponent out of range");
  const int magnitude = -exponent;
  return MotivicClass(pow(base.denominator(), magnitude), pow(base.numerator(), magnitude));
}

mpq_class eval_at(const MotivicClass& a, const mpz_class& q) {
  const mpq_class x(q);
  const mpq_class den = a.denominator().evaluate(x);
  if (den == 0) throw PoleError("class has a pole at L = " + q.get_str());
  mpq_class value = a.numerator().evaluate(x) / den;
  value.canonicalize();
  return value;
}

bool is_effective(const MotivicClass& a) {
  if (!a.is_laurent_polynomial()) return false;
  for (const auto& t : a.numerator().terms()) {
    if (t.coefficient < 0) return false;
  }
  return true;
}

}  // namespace motivic
