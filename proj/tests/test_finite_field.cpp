#include "support.hpp"

#include "motivic/errors.hpp"
#include "motivic/finite_field.hpp"

using motivic::GaloisField;

TEST_CASE("field axioms hold exhaustively on every tabulated field") {
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}}) {
    CAPTURE(p);
    CAPTURE(k);
    const GaloisField f(p, k);
    const int q = f.size();
    CHECK(q == (p == 2 ? 1 << k : (k == 1 ? 3 : k == 2 ? 9 : 27)));
    for (int a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.power(a, static_cast<std::uint64_t>(q)) == a);
      int inverses = 0;
      for (int b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        inverses += f.mul(a, b) == 1 ? 1 : 0;
        CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
        CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
        for (int c = 0; c < q; ++c) {
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        }
      }
      CHECK(inverses == (a == 0 ? 0 : 1));
    }
    for (int e = 1; e <= k; ++e) {
      int fixed = 0;
      for (int a = 0; a < q; ++a) fixed += f.in_subfield(a, e) ? 1 : 0;
      int expected = 1;
      for (int i = 0; i < e; ++i) expected *= p;
      CHECK(fixed == (k % e == 0 ? expected : p));
    }
  }
}

TEST_CASE("unsupported fields") {
  CHECK_THROWS_AS(GaloisField(5, 1), motivic::InvalidArgument);
  CHECK_THROWS_AS(GaloisField(2, 4), motivic::InvalidArgument);
}
