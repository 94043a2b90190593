#include <limits>

#include "support.hpp"

#include "motivic/errors.hpp"

using namespace testing;
using motivic::MotivicClass;
using motivic::MotivicPolynomial;

TEST_CASE("reduced form") {
  SUBCASE("common factors cancel") {
    MotivicClass c(2 * Lp() - 2, 4 * Lp(2) - 4);
    CHECK(c.numerator() == MotivicPolynomial(1));
    CHECK(c.denominator() == 2 * Lp() + 2);
  }
  SUBCASE("denominator leads positive") {
    MotivicClass c(1, 1 - Lp());
    CHECK(c.numerator() == MotivicPolynomial(-1));
    CHECK(c.denominator() == Lp() - 1);
  }
  SUBCASE("powers of L move to the numerator") {
    MotivicClass c(Lp(), Lp(3) - Lp(2));
    CHECK(c == MotivicClass(Lp(-1), Lp() - 1));
    CHECK(c.denominator().low_exponent() == 0);
    MotivicClass d(1, Lp(2));
    CHECK(d.is_laurent_polynomial());
    CHECK(d.numerator() == Lp(-2));
  }
  SUBCASE("rational scalars") {
    MotivicClass c(Lp() + 1, 2);
    CHECK(c.numerator() == Lp() + 1);
    CHECK(c.denominator() == MotivicPolynomial(2));
    CHECK(c * 2 == MotivicClass(Lp() + 1));
  }
  SUBCASE("zero") {
    MotivicClass z(0, Lp() - 1);
    CHECK(z.is_zero());
    CHECK(z == MotivicClass(0));
    CHECK(z.denominator() == MotivicPolynomial(1));
  }
  CHECK_THROWS_AS(MotivicClass(Lp(), 0), motivic::DivisionByZero);
}

TEST_CASE("equal fractions have equal representations") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_polynomial(rng, 3, -2, 3, 4);
    const auto q = random_nonzero_polynomial(rng);
    const auto r = random_nonzero_polynomial(rng);
    const MotivicClass direct(p, q);
    const MotivicClass scaled(p * r, q * r);
    CHECK(direct == scaled);
    CHECK(direct.numerator() == scaled.numerator());
    CHECK(direct.denominator() == scaled.denominator());
  }
}

TEST_CASE("reduced numerator and denominator are coprime") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const auto c = random_fraction(rng);
    if (c.is_zero()) continue;
    const auto& num = c.numerator();
    const auto shifted = num.shifted(-num.low_exponent());
    CHECK(motivic::polynomial_gcd(shifted, c.denominator()) == MotivicPolynomial(1));
    CHECK(c.denominator().low_exponent() == 0);
    CHECK(c.denominator().leading_coefficient() > 0);
  }
}

TEST_CASE("gcd by hand") {
  CHECK(motivic::polynomial_gcd(Lp(2) - 1, Lp(2) - 2 * Lp() + 1) == Lp() - 1);
  CHECK(motivic::polynomial_gcd(2 * Lp() + 2, 4 * Lp(2) - 4) == Lp() + 1);
  CHECK(motivic::polynomial_gcd(Lp() + 1, Lp() + 2) == MotivicPolynomial(1));
}

TEST_CASE("field axioms on random fractions") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_fraction(rng);
    const auto b = random_fraction(rng);
    const auto c = random_fraction(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - b + b == a);
    if (!b.is_zero()) {
      CHECK((a * b) / b == a);
      CHECK(a / b * b == a);
    }
  }
}

TEST_CASE("evaluation agrees with evaluating numerator and denominator separately") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_polynomial(rng, 3, -2, 3, 4);
    const auto q = random_nonzero_polynomial(rng);
    const auto b = random_fraction(rng);
    for (int x : {2, 3, -2, 7}) {
      const mpq_class den = naive_eval(q, x);
      if (den == 0) continue;
      const MotivicClass a(p, q);
      CHECK(motivic::eval_at(a, x) == naive_eval(p, x) / den);
      if (naive_eval(b.denominator(), x) == 0) continue;
      CHECK(motivic::eval_at(a * b, x) == motivic::eval_at(a, x) * motivic::eval_at(b, x));
      CHECK(motivic::eval_at(a + b, x) == motivic::eval_at(a, x) + motivic::eval_at(b, x));
    }
  }
}

TEST_CASE("poles") {
  CHECK_THROWS_AS(motivic::eval_at(C("1/(L-1)"), 1), motivic::PoleError);
  CHECK_THROWS_AS(motivic::eval_at(C("L^-1"), 0), motivic::PoleError);
  CHECK(motivic::eval_at(C("1/(L-1)"), 3) == mpq_class(1, 2));
  CHECK_THROWS_AS(L() / MotivicClass(0), motivic::DivisionByZero);
}

TEST_CASE("integer powers") {
  CHECK(pow(C("1/(L-1)"), 2) == MotivicClass(1, Lp(2) - 2 * Lp() + 1));
  CHECK(pow(C("L-1"), -1) == C("1/(L-1)"));
  CHECK(pow(L(), -3) == L(-3));
  CHECK(pow(C("2/3"), 0) == MotivicClass(1));
  CHECK_THROWS_AS(pow(MotivicClass(0), -1), motivic::DivisionByZero);
  CHECK_THROWS_AS(pow(L(), std::numeric_limits<int>::min()), motivic::InvalidArgument);
}

TEST_CASE("Adams operations on fractions") {
  CHECK(C("1/(L-1)").adams(2) == C("1/(L^2-1)"));
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_fraction(rng);
    const auto b = random_fraction(rng);
    CHECK((a * b).adams(2) == a.adams(2) * b.adams(2));
    CHECK((a + b).adams(3) == a.adams(3) + b.adams(3));
  }
}

TEST_CASE("effectivity") {
  CHECK(motivic::is_effective(C("L^2+1")));
  CHECK(motivic::is_effective(C("0")));
  CHECK_FALSE(motivic::is_effective(C("L-1")));
  CHECK_FALSE(motivic::is_effective(C("1/(L+1)")));
}

TEST_CASE("worked examples") {
  CHECK(C("L-1") + 1 == L());
  CHECK(MotivicClass(0) + L(2) == L(2));
  CHECK(C("1/(L-1)") + C("1/(L+1)") == C("2*L/(L^2-1)"));
  CHECK(C("(L+1)*(L-1)") == C("L^2-1"));
  CHECK(L(-1) * L() == MotivicClass(1));
  CHECK(C("1/(L-1)") * C("L^2-1") == C("L+1"));
  CHECK(C("L^4-1") / C("L^2-1") == C("L^2+1"));
  CHECK(L() / L() == MotivicClass(1));
  const auto bgl2 = C("1/((L^2-L)*(L^2-1))");
  CHECK(bgl2.numerator() == Lp(-1));
  CHECK(bgl2.denominator() == Lp(3) - Lp(2) - Lp() + 1);
  CHECK(motivic::eval_at(C("L^2+L+1"), 2) == 7);
  CHECK(motivic::eval_at(C("L^-1"), 2) == mpq_class(1, 2));
  CHECK_FALSE(motivic::is_effective(C("L^2-L")));
  CHECK(motivic::is_effective(C("1+L+2*L^2+L^3+L^4")));
  CHECK(C("3") == MotivicClass(3));
}
