#include "support.hpp"

#include <functional>
#include <set>

#include "motivic/errors.hpp"
#include "motivic/power_structure.hpp"
#include "motivic/suites.hpp"

using namespace testing;
using motivic::power;
using motivic::TruncatedSeries;

namespace {

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// Partitions of k as multiplicity vectors, by brute force over all
// multiplicity tuples.
std::set<std::vector<int>> brute_partition_vectors(int k, int r, int max_size) {
  std::set<std::vector<int>> out;
  std::vector<int> v(static_cast<std::size_t>(r), 0);
  std::function<void(int)> fill = [&](int i) {
    if (i > r) {
      int weight = 0, size = 0;
      for (int j = 1; j <= r; ++j) {
        weight += j * v[static_cast<std::size_t>(j - 1)];
        size += v[static_cast<std::size_t>(j - 1)];
      }
      if (weight == k && size <= max_size) {
        auto trimmed = v;
        while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
        out.insert(trimmed);
      }
      return;
    }
    for (int c = 0; c * i <= k; ++c) {
      v[static_cast<std::size_t>(i - 1)] = c;
      fill(i + 1);
    }
  };
  fill(1);
  return out;
}

}  // namespace

TEST_CASE("Euler factors of known series") {
  SUBCASE("geometric series") {
    const auto f = motivic::euler_factorize(TruncatedSeries::geometric(6));
    CHECK(f.order == 6);
    CHECK(f.b(1) == MotivicClass(1));
    for (int i = 2; i <= 6; ++i) CHECK(f.b(i) == MotivicClass(0));
  }
  SUBCASE("1 + T = (1 - T)^-1 (1 - T^2)") {
    const auto f = motivic::euler_factorize(S("1 + T + O(T^7)"));
    CHECK(f.b(1) == MotivicClass(1));
    CHECK(f.b(2) == MotivicClass(-1));
    for (int i = 3; i <= 6; ++i) CHECK(f.b(i) == MotivicClass(0));
  }
  SUBCASE("1/(1 - L T) = (1 - T)^-L") {
    const auto f = motivic::euler_factorize(S("1/(1 - L*T) + O(T^6)"));
    CHECK(f.b(1) == L());
    for (int i = 2; i <= 5; ++i) CHECK(f.b(i) == MotivicClass(0));
  }
  CHECK_THROWS_AS(motivic::euler_factorize(S("2 + T + O(T^3)")), motivic::InvalidArgument);
}

TEST_CASE("Euler factorization: recurrence route equals division route") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_series(rng, draw(rng, 0, 8), true);
    const auto fast = motivic::euler_factorize(a);
    CHECK(fast == motivic::euler_factorize_reference(a));
    CHECK(motivic::expand(fast) == a);
  }
}

TEST_CASE("single factors expand by the generalized binomial theorem") {
  const int order = 12;
  for (int i = 1; i <= 3; ++i) {
    for (int n = 0; n <= 4; ++n) {
      // (1 - T^i)^-n = sum_j C(n + j - 1, j) T^(ij)
      std::vector<MotivicClass> expected(order + 1);
      for (int j = 0; i * j <= order; ++j) {
        expected[static_cast<std::size_t>(i * j)] = n == 0 ? MotivicClass(j == 0 ? 1 : 0)
                                                           : MotivicClass(binomial(n + j - 1, j));
      }
      CHECK(motivic::expand_factor(i, n, order) == TruncatedSeries(expected));
    }
    // (1 - T^i)^(-L^2) = (1 - L^2 T^i)^-1
    std::vector<MotivicClass> geometric(order + 1);
    for (int j = 0; i * j <= order; ++j) geometric[static_cast<std::size_t>(i * j)] = L(2 * j);
    CHECK(motivic::expand_factor(i, L(2), order) == TruncatedSeries(geometric));
  }
  CHECK(motivic::expand_factor(2, -L(), 5) == S("1 - L*T^2 + O(T^6)"));
  CHECK(motivic::expand_factor(1, C("L^-1 - 2"), 2) == S("(1 - T)^2/(1 - L^-1*T) + O(T^3)"));
  CHECK_THROWS_AS(motivic::expand_factor(1, C("1/(L-1)"), 3), motivic::UnsupportedExponent);
  CHECK_THROWS_AS(motivic::expand_factor(1, C("1/2"), 3), motivic::UnsupportedExponent);
  CHECK_THROWS_AS(motivic::expand_factor(0, 1, 3), motivic::InvalidArgument);
}

TEST_CASE("hand-expanded powers") {
  CHECK(power(S("1 + T + O(T^3)"), L()) == S("1 + L*T + (L^2 - L)*T^2 + O(T^3)"));
  CHECK(power(S("1 + T + O(T^4)"), 2) == S("1 + 2*T + T^2 + O(T^4)"));
  CHECK(power(TruncatedSeries::geometric(3), L()) == S("1 + L*T + L^2*T^2 + L^3*T^3 + O(T^4)"));
  // [S^k G_m] = L^k - L^(k-1)
  const auto gm = power(TruncatedSeries::geometric(6), L() - 1);
  CHECK(gm[0] == MotivicClass(1));
  for (int k = 1; k <= 6; ++k) CHECK(gm[k] == L(k) - L(k - 1));
  // S^2 P^1 = P^2
  CHECK(power(TruncatedSeries::geometric(2), C("1+L"))[2] == C("1 + L + L^2"));
  CHECK(power(TruncatedSeries::geometric(4), -1) == S("1 - T + O(T^5)"));
  CHECK_THROWS_AS(power(S("1 + T + O(T^2)"), C("1/(L-1)")), motivic::UnsupportedExponent);
  CHECK_THROWS_AS(power(S("3 + T + O(T^2)"), L()), motivic::InvalidArgument);
}

TEST_CASE("integer exponents agree with repeated multiplication") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_series(rng, draw(rng, 0, 8), true);
    auto repeated = TruncatedSeries::one(a.order());
    for (int n = 0; n <= 4; ++n) {
      CHECK(power(a, n) == repeated);
      CHECK(power(a, -n) == motivic::invert(repeated));
      repeated = repeated * a;
    }
  }
}

TEST_CASE("fast power equals the literal factor product") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_series(rng, draw(rng, 0, 8), true);
    const auto m = random_polynomial(rng, 3, -2, 2, 3);
    CHECK(power(a, m) == motivic::power_reference(a, m));
  }
  // Long enough to run the parallel path.
  const auto a = S("1 + L*T + (L^2+1)*T^3 + O(T^25)");
  CHECK(power(a, C("L^2 - 3*L^-1")) == motivic::power_reference(a, C("L^2 - 3*L^-1")));
}

TEST_CASE("the seven properties on hand-rolled inputs") {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 80; ++trial) {
    const int order = draw(rng, 1, 7);
    const auto a = motivic::random_effective_series(rng, order);
    const auto b = random_series(rng, order, true);
    const MotivicClass m = random_polynomial(rng, 3, -2, 2, 3);
    const MotivicClass n = random_polynomial(rng, 3, -2, 2, 3);
    const int l = draw(rng, 1, 3);
    CHECK(power(a, 0) == TruncatedSeries::one(order));
    CHECK(power(a, 1) == a);
    CHECK(power(a * b, m) == power(a, m) * power(b, m));
    CHECK(power(a, m + n) == power(a, m) * power(a, n));
    CHECK(power(a, m * n) == power(power(a, n), m));
    const auto linear = power(S("1 + T + O(T^2)"), m);
    CHECK(linear == TruncatedSeries(std::vector<MotivicClass>{1, m}));
    CHECK(power(motivic::substitute(a, 1, l), m) == motivic::substitute(power(a, m), 1, l));
  }
}

TEST_CASE("partition vectors") {
  std::vector<std::string> listed;
  for (const auto& v : motivic::enumerate_partition_vectors(4, 4, 4)) listed.push_back(motivic::to_string(v));
  CHECK(listed == std::vector<std::string>{"[4]", "[2,1]", "[1,0,1]", "[0,2]", "[0,0,0,1]"});

  CHECK(motivic::enumerate_partition_vectors(0, 3, 3).size() == 1);
  for (int k = 0; k <= 12; ++k) {
    for (int r = 1; r <= 5; ++r) {
      for (int s = 0; s <= 6; ++s) {
        std::set<std::vector<int>> got;
        for (const auto& v : motivic::enumerate_partition_vectors(k, r, s)) {
          CHECK(v.weight() == k);
          CHECK(v.size() <= s);
          got.insert(v.multiplicities);
        }
        CHECK(got == brute_partition_vectors(k, std::min(r, std::max(k, 1)), s));
      }
    }
  }
}

TEST_CASE("finite exponent: orbit counts equal polynomial powers") {
  const std::vector<long> one{1};
  CHECK(motivic::power_finite(one, 2, 4) == S("1 + 2*T + T^2 + O(T^5)"));
  const std::vector<long> two{2, -1};
  CHECK(motivic::power_finite(two, 0, 3) == TruncatedSeries::one(3));
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<long> a(static_cast<std::size_t>(draw(rng, 1, 4)));
    std::vector<MotivicClass> poly{1};
    for (auto& x : a) {
      x = draw(rng, -3, 3);
      poly.emplace_back(x);
    }
    const int order = draw(rng, 0, 8);
    const auto series = TruncatedSeries::from_polynomial(poly, order);
    auto repeated = TruncatedSeries::one(order);
    for (int m = 0; m <= 6; ++m) {
      CHECK(motivic::power_finite(a, m, order) == repeated);
      repeated = repeated * series;
    }
  }
  CHECK_THROWS_AS(motivic::power_finite(one, -1, 3), motivic::InvalidArgument);
}

TEST_CASE("worked power-structure examples") {
  const auto f = motivic::euler_factorize(S("1/((1-T)*(1-L*T)) + O(T^6)"));
  CHECK(f.b(1) == C("1+L"));
  for (int i = 2; i <= 5; ++i) CHECK(f.b(i) == MotivicClass(0));
  CHECK(motivic::expand_factor(1, L(), 3) == S("1 + L*T + L^2*T^2 + L^3*T^3 + O(T^4)"));
  CHECK(motivic::expand_factor(1, 1, 3) == TruncatedSeries::geometric(3));
  CHECK(power(S("1 + T + O(T^4)"), L()) == S("1 + L*T + (L^2-L)*T^2 + (L^3-L^2)*T^3 + O(T^4)"));

  // (1 + a1 T + a2 T^2)^3 has T^2 coefficient 3 a1^2 + 3 a2
  const std::vector<long> a{2, 5};
  CHECK(motivic::power_finite(a, 3, 2)[2] == MotivicClass(27));

  std::vector<std::set<std::vector<int>>> expected{{{2}, {0, 1}}, {{0, 0, 0, 1}, {1, 0, 1}, {0, 2}}};
  std::set<std::vector<int>> two, four;
  for (const auto& v : motivic::enumerate_partition_vectors(2, 2, 2)) two.insert(v.multiplicities);
  for (const auto& v : motivic::enumerate_partition_vectors(4, 4, 2)) four.insert(v.multiplicities);
  CHECK(two == expected[0]);
  CHECK(four == expected[1]);
  const auto empty = motivic::enumerate_partition_vectors(0, 5, 5);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].multiplicities.empty());
}
