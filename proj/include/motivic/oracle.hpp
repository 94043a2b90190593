#pragma once

#include <gmpxx.h>
#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "motivic/motivic_class.hpp"
#include "motivic/report.hpp"

namespace motivic {

/// Point counts N_d = |X(F_{q^d})| for d = 1..D.
struct PointCountTable {
  std::int64_t q = 2;
  std::vector<mpz_class> counts;  // counts[d - 1] = N_d

  int depth() const { return static_cast<int>(counts.size()); }
  friend bool operator==(const PointCountTable&, const PointCountTable&) = default;
};

/// {"q": q, "counts": [N_1, ...]}; counts beyond 64 bits are written as strings.
nlohmann::json to_json(const PointCountTable& table);
PointCountTable table_from_json(const nlohmann::json& j);

/// N_d = c(q^d). c must be effective.
PointCountTable counts_from_class(const MotivicClass& c, std::int64_t q, int depth);

/// Closed points of each degree by Moebius inversion,
/// C_d = (1/d) sum_{e | d} mu(d/e) N_e. Throws InconsistentTable when a
/// value is negative or fractional.
std::vector<mpz_class> closed_points(const PointCountTable& table);

/// Effective zero-cycles of degree m: the t^m coefficient of
/// prod_d (1 - t^d)^(-C_d). Needs C_1..C_m.
mpz_class cycles_from_closed_points(const std::vector<mpz_class>& closed, int m);

/// t^m coefficient of exp(sum_d N_d t^d / d) over Q. A non-integral
/// coefficient throws InconsistentTable.
mpz_class weil_coefficients(const PointCountTable& table, int m);

/// The spaces the oracle knows by name.
struct Space {
  enum class Kind { Affine, Projective, Grassmannian };
  Kind kind = Kind::Affine;
  int dimension = 0;  // n for A^n, N for P^N, N for Gr(m, N)
  int rank = 0;       // m for Gr(m, N)

  friend bool operator==(const Space&, const Space&) = default;
};

/// Parses `A^n`, `P^N` or `Gr(m,N)`.
Space parse_space(std::string_view text);
std::string to_string(const Space& space);
MotivicClass space_class(const Space& space);

/// Frobenius-stable m-multisets of geometric points of A^1, A^2, P^1 or
/// P^2 over F_q, q in {2, 3}, m <= 3, enumerated one by one over explicit
/// extension-field tables. Anything else throws InvalidArgument.
std::uint64_t brute_force_cycles(const Space& space, std::int64_t q, int m);

/// eval(S^k class, q) = Weil coefficient = closed-point census, k = 1..m.
VerificationReport crosscheck_kapranov_weil(const MotivicClass& c, std::int64_t q, int m);

}  // namespace motivic
