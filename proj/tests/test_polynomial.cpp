#include "support.hpp"

#include "motivic/errors.hpp"

using namespace testing;
using motivic::MotivicPolynomial;

TEST_CASE("terms are merged, sorted and zero-free") {
  auto p = MotivicPolynomial::from_terms({{2, 1}, {0, 3}, {2, -1}, {-1, 0}});
  CHECK(p == MotivicPolynomial(3));
  CHECK(p.is_constant());

  auto q = MotivicPolynomial::from_terms({{3, 2}, {-2, 1}, {0, -4}});
  REQUIRE(q.size() == 3);
  CHECK(q.terms()[0].exponent == -2);
  CHECK(q.terms()[2].exponent == 3);
  CHECK(q.low_exponent() == -2);
  CHECK(q.high_exponent() == 3);
  CHECK(q.leading_coefficient() == 2);
  CHECK(q.coefficient(0) == -4);
  CHECK(q.coefficient(1) == 0);
  CHECK(MotivicPolynomial(0).is_zero());
  CHECK(MotivicPolynomial(1).is_one());
}

TEST_CASE("zero polynomial has no exponents") {
  MotivicPolynomial zero;
  CHECK_THROWS_AS(zero.low_exponent(), motivic::InvalidArgument);
  CHECK_THROWS_AS(zero.high_exponent(), motivic::InvalidArgument);
  CHECK_THROWS_AS(zero.leading_coefficient(), motivic::InvalidArgument);
}

TEST_CASE("small products by hand") {
  CHECK((Lp() - 1) * (Lp() + 1) == Lp(2) - 1);
  CHECK((Lp() + 1) * (Lp() + 1) == Lp(2) + 2 * Lp() + 1);
  CHECK(Lp(-1) * Lp() == MotivicPolynomial(1));
  CHECK(pow(Lp() - 1, 3) == Lp(3) - 3 * Lp(2) + 3 * Lp() - 1);
  CHECK(pow(Lp() + 7, 0) == MotivicPolynomial(1));
  CHECK_THROWS_AS(pow(Lp() + 1, -1), motivic::InvalidArgument);
}

TEST_CASE("product agrees with a naive term-by-term product") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_polynomial(rng, 6, -8, 8, 9);
    const auto b = random_polynomial(rng, 6, -8, 8, 9);
    CHECK(as_map(a * b) == naive_product(a, b));
  }
}

TEST_CASE("sparse products with a wide exponent span") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_polynomial(rng, 4, -5000, 5000, 3);
    const auto b = random_polynomial(rng, 4, -5000, 5000, 3);
    CHECK(as_map(a * b) == naive_product(a, b));
  }
}

TEST_CASE("ring axioms on random Laurent polynomials") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_polynomial(rng);
    const auto b = random_polynomial(rng);
    const auto c = random_polynomial(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == MotivicPolynomial(0));
    CHECK(a + MotivicPolynomial(0) == a);
    CHECK(a * MotivicPolynomial(1) == a);
    CHECK(-(-a) == a);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(14);
  const std::vector<mpq_class> points{2, -3, mpq_class(1, 2), mpq_class(-5, 7)};
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_polynomial(rng);
    const auto b = random_polynomial(rng);
    for (const auto& x : points) {
      CHECK(a.evaluate(x) == naive_eval(a, x));
      CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
      CHECK((a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x));
    }
  }
}

TEST_CASE("evaluation at zero") {
  CHECK((Lp(2) + 3).evaluate(0) == 3);
  CHECK_THROWS_AS((Lp(-1) + 3).evaluate(0), motivic::PoleError);
}

TEST_CASE("Adams operations, shifts and exact division") {
  CHECK((Lp(2) - Lp(-1) + 3).adams(3) == Lp(6) - Lp(-3) + 3);
  CHECK_THROWS_AS(Lp().adams(0), motivic::InvalidArgument);
  CHECK((Lp() + 1).shifted(-2) == Lp(-1) + Lp(-2));
  CHECK((6 * Lp() - 4).divided_exactly(2) == 3 * Lp() - 2);
  CHECK((6 * Lp() - 4).content() == 2);
  CHECK_THROWS_AS((3 * Lp() + 2).divided_exactly(2), motivic::InvalidArgument);
  CHECK_THROWS_AS(Lp().divided_exactly(0), motivic::DivisionByZero);

  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_polynomial(rng);
    const auto b = random_polynomial(rng);
    const int j = draw(rng, 1, 4);
    CHECK((a * b).adams(j) == a.adams(j) * b.adams(j));
    CHECK((a + b).adams(j) == a.adams(j) + b.adams(j));
    CHECK(a.adams(j).evaluate(2) == a.evaluate(mpq_class(1 << j)));
  }
}

TEST_CASE("big coefficients stay exact") {
  auto p = pow(Lp() + 1, 200);
  mpz_class middle;
  mpz_bin_uiui(middle.get_mpz_t(), 200, 100);
  CHECK(p.coefficient(100) == middle);
  CHECK(p.evaluate(1) == mpq_class(mpz_class(1) << 200));
}
