#include "motivic/oracle.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <regex>
#include <unordered_map>

#include "motivic/errors.hpp"
#include "motivic/finite_field.hpp"
#include "motivic/text.hpp"
#include "motivic/varieties.hpp"
#include "motivic/zeta.hpp"

namespace motivic {

nlohmann::json to_json(const PointCountTable& table) {
  nlohmann::json counts = nlohmann::json::array();
  for (const auto& n : table.counts) {
    if (n.fits_ulong_p() && sizeof(unsigned long) >= sizeof(std::uint64_t)) {
      counts.push_back(static_cast<std::uint64_t>(n.get_ui()));
    } else {
      counts.push_back(n.get_str());
    }
  }
  return {{"q", table.q}, {"counts", counts}};
}

PointCountTable table_from_json(const nlohmann::json& j) {
  PointCountTable table;
  table.q = j.at("q").get<std::int64_t>();
  if (table.q < 2) throw InvalidArgument("point-count table needs q >= 2");
  for (const auto& n : j.at("counts")) {
    if (n.is_string()) {
      table.counts.emplace_back(n.get<std::string>());
    } else if (n.is_number_unsigned()) {
      table.counts.emplace_back(static_cast<unsigned long>(n.get<std::uint64_t>()));
    } else if (n.is_number_integer()) {
      table.counts.emplace_back(static_cast<long>(n.get<std::int64_t>()));
    } else {
      throw InvalidArgument("point counts must be integers");
    }
    if (table.counts.back() < 0) throw InconsistentTable("negative point count");
  }
  return table;
}

PointCountTable counts_from_class(const MotivicClass& c, std::int64_t q, int depth) {
  if (!is_effective(c) || (!c.is_zero() && c.numerator().low_exponent() < 0)) {
    throw InvalidArgument("point counts need an effective polynomial class, got " + format_class(c));
  }
  if (q < 2) throw InvalidArgument("q must be at least 2");
  if (depth < 0) throw InvalidArgument("table depth must be nonnegative");
  PointCountTable table{q, {}};
  mpz_class field_size = 1;
  for (int d = 1; d <= depth; ++d) {
    field_size *= static_cast<long>(q);
    table.counts.push_back(eval_at(c, field_size).get_num());
  }
  return table;
}

namespace {

int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

std::vector<mpz_class> closed_points(const PointCountTable& table) {
  std::vector<mpz_class> out;
  for (int d = 1; d <= table.depth(); ++d) {
    mpz_class sum = 0;
    for (int e = 1; e <= d; ++e) {
      if (d % e != 0) continue;
      const int mu = moebius(d / e);
      if (mu != 0) sum += mu * table.counts[static_cast<std::size_t>(e - 1)];
    }
    if (!mpz_divisible_ui_p(sum.get_mpz_t(), static_cast<unsigned long>(d)) || sum < 0) {
      throw InconsistentTable("closed points of degree " + std::to_string(d) + " would be " +
                              mpq_class(sum, d).get_str());
    }
    mpz_divexact_ui(sum.get_mpz_t(), sum.get_mpz_t(), static_cast<unsigned long>(d));
    out.push_back(std::move(sum));
  }
  return out;
}

mpz_class cycles_from_closed_points(const std::vector<mpz_class>& closed, int m) {
  if (m < 0) throw InvalidArgument("cycle degree must be nonnegative");
  if (static_cast<int>(closed.size()) < m) throw InvalidArgument("closed-point census too short");
  std::vector<mpz_class> series(static_cast<std::size_t>(m) + 1, 0);
  series[0] = 1;
  for (int d = 1; d <= m; ++d) {
    const mpz_class& c = closed[static_cast<std::size_t>(d - 1)];
    if (c == 0) continue;
    // (1 - t^d)^(-c): multisets of closed points of degree d.
    std::vector<mpz_class> factor(static_cast<std::size_t>(m / d) + 1);
    factor[0] = 1;
    for (int j = 1; j <= m / d; ++j) {
      mpz_class next = factor[static_cast<std::size_t>(j - 1)] * (c + (j - 1));
      mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(j));
      factor[static_cast<std::size_t>(j)] = std::move(next);
    }
    std::vector<mpz_class> product(series.size(), 0);
    for (int k = 0; k <= m; ++k) {
      if (series[static_cast<std::size_t>(k)] == 0) continue;
      for (int j = 0; k + d * j <= m; ++j) {
        product[static_cast<std::size_t>(k + d * j)] +=
            series[static_cast<std::size_t>(k)] * factor[static_cast<std::size_t>(j)];
      }
    }
    series = std::move(product);
  }
  return series[static_cast<std::size_t>(m)];
}

mpz_class weil_coefficients(const PointCountTable& table, int m) {
  if (m < 0) throw InvalidArgument("cycle degree must be nonnegative");
  if (table.depth() < m) throw InvalidArgument("point-count table too short for degree " + std::to_string(m));
  // Z = exp(S) with S' = sum N_d t^{d-1}, so k z_k = sum_{d=1}^k N_d z_{k-d}.
  std::vector<mpq_class> z(static_cast<std::size_t>(m) + 1);
  z[0] = 1;
  for (int k = 1; k <= m; ++k) {
    mpq_class sum = 0;
    for (int d = 1; d <= k; ++d) sum += mpq_class(table.counts[static_cast<std::size_t>(d - 1)]) * z[static_cast<std::size_t>(k - d)];
    sum /= k;
    sum.canonicalize();
    if (sum.get_den() != 1) {
      throw InconsistentTable("Weil zeta coefficient of t^" + std::to_string(k) + " is " + sum.get_str());
    }
    z[static_cast<std::size_t>(k)] = std::move(sum);
  }
  return z[static_cast<std::size_t>(m)].get_num();
}

Space parse_space(std::string_view text) {
  static const std::regex affine(R"(\s*A\s*\^\s*(\d+)\s*)");
  static const std::regex projective(R"(\s*P\s*\^\s*(\d+)\s*)");
  static const std::regex grassmannian(R"(\s*Gr\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
  const std::string s(text);
  std::smatch match;
  try {
    if (std::regex_match(s, match, affine)) return {Space::Kind::Affine, std::stoi(match[1]), 0};
    if (std::regex_match(s, match, projective)) return {Space::Kind::Projective, std::stoi(match[1]), 0};
    if (std::regex_match(s, match, grassmannian)) {
      const int m = std::stoi(match[1]);
      const int n = std::stoi(match[2]);
      if (m > n) throw InvalidArgument("Gr(m,N) needs m <= N");
      return {Space::Kind::Grassmannian, n, m};
    }
  } catch (const std::out_of_range&) {
    throw InvalidArgument("space dimension too large: " + s);
  }
  throw InvalidArgument("unknown space '" + s + "'; expected A^n, P^N or Gr(m,N)");
}

std::string to_string(const Space& space) {
  switch (space.kind) {
    case Space::Kind::Affine:
      return "A^" + std::to_string(space.dimension);
    case Space::Kind::Projective:
      return "P^" + std::to_string(space.dimension);
    case Space::Kind::Grassmannian:
      return "Gr(" + std::to_string(space.rank) + "," + std::to_string(space.dimension) + ")";
  }
  return {};
}

MotivicClass space_class(const Space& space) {
  switch (space.kind) {
    case Space::Kind::Affine:
      return affine_class(space.dimension);
    case Space::Kind::Projective:
      return projective_class(space.dimension);
    case Space::Kind::Grassmannian:
      return grassmannian_class(space.rank, space.dimension);
  }
  throw InvalidArgument("unknown space kind");
}

namespace {

using Point = std::array<int, 3>;

// Points of the space over F, listed with coordinates in F.
std::vector<Point> rational_points(const Space& space, const GaloisField& field) {
  std::vector<Point> out;
  const int s = field.size();
  if (space.kind == Space::Kind::Affine) {
    if (space.dimension == 1) {
      for (int x = 0; x < s; ++x) out.push_back({x, 0, 0});
    } else {
      for (int x = 0; x < s; ++x) {
        for (int y = 0; y < s; ++y) out.push_back({x, y, 0});
      }
    }
    return out;
  }
  // Homogeneous coordinates normalized so the first nonzero one is 1.
  const int coords = space.dimension + 1;
  std::vector<int> v(static_cast<std::size_t>(coords));
  const int total = coords == 2 ? s * s : s * s * s;
  for (int code = 1; code < total; ++code) {
    int c = code;
    for (auto& x : v) {
      x = c % s;
      c /= s;
    }
    const auto first = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
    if (*first != 1) continue;
    Point p{0, 0, 0};
    std::copy(v.begin(), v.end(), p.begin());
    out.push_back(p);
  }
  return out;
}

bool defined_over_subfield(const Point& p, const GaloisField& field, int e) {
  return std::all_of(p.begin(), p.end(), [&](int x) { return field.in_subfield(x, e); });
}

std::int64_t encode(const Point& p, int s) { return (static_cast<std::int64_t>(p[2]) * s + p[1]) * s + p[0]; }

}  // namespace

std::uint64_t brute_force_cycles(const Space& space, std::int64_t q, int m) {
  const bool supported_space =
      (space.kind == Space::Kind::Affine || space.kind == Space::Kind::Projective) &&
      (space.dimension == 1 || space.dimension == 2);
  if (!supported_space || (q != 2 && q != 3) || m < 0 || m > 3) {
    throw InvalidArgument("brute force covers A^1, A^2, P^1, P^2 over F_2, F_3 with m <= 3; got " +
                          to_string(space) + ", q=" + std::to_string(q) + ", m=" + std::to_string(m));
  }
  if (m == 0) return 1;

  // Geometric points of degree <= m: for each d, the points over F_{q^d}
  // not defined over a proper subfield. Frobenius permutes each layer.
  std::vector<int> frobenius;
  for (int d = 1; d <= m; ++d) {
    const GaloisField field(static_cast<int>(q), d);
    const auto points = rational_points(space, field);
    std::vector<Point> layer;
    for (const auto& p : points) {
      bool smaller = false;
      for (int e = 1; e < d; ++e) smaller = smaller || (d % e == 0 && defined_over_subfield(p, field, e));
      if (!smaller) layer.push_back(p);
    }
    std::unordered_map<std::int64_t, int> position;
    for (std::size_t i = 0; i < layer.size(); ++i) position[encode(layer[i], field.size())] = static_cast<int>(i);
    const int offset = static_cast<int>(frobenius.size());
    for (const auto& p : layer) {
      Point image{field.frobenius(p[0]), field.frobenius(p[1]), field.frobenius(p[2])};
      frobenius.push_back(offset + position.at(encode(image, field.size())));
    }
  }

  // Every sorted m-tuple is a multiset; keep those equal to their image.
  const int n = static_cast<int>(frobenius.size());
  std::uint64_t stable = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : stable)
  for (int a = 0; a < n; ++a) {
    if (m == 1) {
      stable += frobenius[static_cast<std::size_t>(a)] == a ? 1 : 0;
      continue;
    }
    const int fa = frobenius[static_cast<std::size_t>(a)];
    for (int b = a; b < n; ++b) {
      const int fb = frobenius[static_cast<std::size_t>(b)];
      if (m == 2) {
        const bool same = (std::min(fa, fb) == a) && (std::max(fa, fb) == b);
        stable += same ? 1 : 0;
        continue;
      }
      for (int c = b; c < n; ++c) {
        std::array<int, 3> image{fa, fb, frobenius[static_cast<std::size_t>(c)]};
        std::sort(image.begin(), image.end());
        stable += (image[0] == a && image[1] == b && image[2] == c) ? 1 : 0;
      }
    }
  }
  return stable;
}

VerificationReport crosscheck_kapranov_weil(const MotivicClass& c, std::int64_t q, int m) {
  VerificationReport report("kapranov-weil", {{"class", format_class(c)}, {"q", q}, {"m", m}});
  const auto table = counts_from_class(c, q, m);
  const auto zeta = kapranov_zeta(c, m);
  std::vector<mpz_class> census;
  try {
    census = closed_points(table);
  } catch (const InconsistentTable& e) {
    report.fail("closed-point census is integral", e.what(), "nonnegative integers");
    return report;
  }
  for (int k = 1; k <= m; ++k) {
    const std::string at = " (k=" + std::to_string(k) + ")";
    const mpq_class motivic = eval_at(zeta[k], q);
    std::string weil;
    try {
      weil = weil_coefficients(table, k).get_str();
    } catch (const InconsistentTable& e) {
      weil = e.what();
    }
    report.expect_equal("[S^k X](q) = Weil coefficient" + at, motivic.get_str(), weil);
    report.expect_equal("Weil coefficient = closed-point census" + at, weil,
                        cycles_from_closed_points(census, k).get_str());
  }
  return report;
}

}  // namespace motivic
