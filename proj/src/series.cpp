#include "motivic/series.hpp"

#include <algorithm>
#include <sstream>

#include "expression_parser.hpp"
#include "motivic/errors.hpp"
#include "motivic/kernels.hpp"
#include "motivic/text.hpp"

namespace motivic {

TruncatedSeries::TruncatedSeries(std::vector<MotivicClass> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw InvalidArgument("a truncated series needs at least c_0");
}

TruncatedSeries TruncatedSeries::constant(const MotivicClass& c, int order) {
  if (order < 0) throw InvalidArgument("series order must be nonnegative");
  std::vector<MotivicClass> coefficients(static_cast<std::size_t>(order) + 1);
  coefficients[0] = c;
  return TruncatedSeries(std::move(coefficients));
}

TruncatedSeries TruncatedSeries::variable(int order) {
  auto out = constant(0, order);
  if (order >= 1) out.coefficients_[1] = 1;
  return out;
}

TruncatedSeries TruncatedSeries::geometric(int order) {
  if (order < 0) throw InvalidArgument("series order must be nonnegative");
  return TruncatedSeries(std::vector<MotivicClass>(static_cast<std::size_t>(order) + 1, 1));
}

TruncatedSeries TruncatedSeries::from_polynomial(std::span<const MotivicClass> coefficients,
                                                 int order) {
  auto out = constant(0, order);
  const std::size_t n = std::min(coefficients.size(), out.coefficients_.size());
  std::copy_n(coefficients.begin(), n, out.coefficients_.begin());
  return out;
}

const MotivicClass& TruncatedSeries::coefficient(int k) const {
  if (k < 0 || k > order()) {
    throw InvalidArgument("coefficient index " + std::to_string(k) + " outside order " +
                          std::to_string(order()));
  }
  return coefficients_[static_cast<std::size_t>(k)];
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
  if (new_order < 0 || new_order > order()) throw InvalidArgument("cannot extend a truncated series");
  return TruncatedSeries(std::vector<MotivicClass>(
      coefficients_.begin(), coefficients_.begin() + new_order + 1));
}

TruncatedSeries TruncatedSeries::operator-() const {
  auto out = *this;
  for (auto& c : out.coefficients_) c = -c;
  return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<MotivicClass> out(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) out[static_cast<std::size_t>(k)] = a[k] + b[k];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  return TruncatedSeries(kernels::cauchy_product_parallel(a.coefficients(), b.coefficients(),
                                                          std::min(a.order(), b.order())));
}

TruncatedSeries multiply_serial(const TruncatedSeries& a, const TruncatedSeries& b) {
  return TruncatedSeries(kernels::cauchy_product_serial(a.coefficients(), b.coefficients(),
                                                        std::min(a.order(), b.order())));
}

TruncatedSeries invert(const TruncatedSeries& a) {
  if (a[0].is_zero()) throw InvalidArgument("cannot invert a series with zero constant term");
  const int n = a.order();
  const MotivicClass inverse_lead = MotivicClass(1) / a[0];
  std::vector<MotivicClass> out(static_cast<std::size_t>(n) + 1);
  out[0] = inverse_lead;
  for (int k = 1; k <= n; ++k) {
    MotivicClass sum;
    for (int i = 1; i <= k; ++i) {
      if (a[i].is_zero()) continue;
      sum += a[i] * out[static_cast<std::size_t>(k - i)];
    }
    out[static_cast<std::size_t>(k)] = inverse_lead.is_one() ? -sum : -(sum * inverse_lead);
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries substitute(const TruncatedSeries& a, const MotivicClass& c, int step) {
  if (step < 1) throw InvalidArgument("substitution T -> c*T^l needs l >= 1");
  const int n = a.order();
  std::vector<MotivicClass> out(static_cast<std::size_t>(n) + 1);
  MotivicClass scale = 1;
  for (int k = 0; static_cast<long long>(k) * step <= n; ++k) {
    out[static_cast<std::size_t>(k * step)] = a[k] * scale;
    scale *= c;
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries pow(const TruncatedSeries& a, long exponent) {
  const TruncatedSeries base = exponent < 0 ? invert(a) : a;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                 : static_cast<unsigned long>(exponent);
  auto result = TruncatedSeries::one(a.order());
  auto square = base;
  while (e != 0) {
    if (e & 1UL) result = result * square;
    e >>= 1UL;
    if (e != 0) square = square * square;
  }
  return result;
}

namespace {

struct SeriesRing {
  using Value = TruncatedSeries;
  int order;

  Value integer(const mpz_class& n) const { return Value::constant(n, order); }
  Value symbol(const std::string& name, std::size_t position) const {
    if (name == "L") return Value::constant(MotivicClass::lefschetz(), order);
    if (name == "T") return Value::variable(order);
    throw ParseError("unknown symbol '" + name + "'", position);
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value neg(const Value& a) const { return -a; }
  Value div(const Value& a, const Value& b, std::size_t position) const {
    if (b[0].is_zero()) throw ParseError("division by a series with zero constant term", position);
    return a * invert(b);
  }
  Value pow(const Value& a, long e, std::size_t position) const {
    if (e < 0 && a[0].is_zero()) {
      throw ParseError("negative power of a series with zero constant term", position);
    }
    return motivic::pow(a, e);
  }
  bool is_special_form(const std::string& name) const { return name == "O"; }
  // O(T^k) contributes nothing; its order was read before evaluation.
  template <typename Parser>
  Value special_form(Parser& parser) const {
    parser.advance();
    parser.expect("(");
    if (parser.peek().kind != detail::Token::Kind::Symbol || parser.peek().text != "T") {
      throw ParseError("expected T inside O(...)", parser.peek().position);
    }
    parser.advance();
    if (parser.accept("^")) parser.integer_literal();
    parser.expect(")");
    return Value::constant(0, order);
  }
};

// Finds O(T^k) and returns k.
std::optional<int> declared_precision(const std::vector<detail::Token>& tokens) {
  using Kind = detail::Token::Kind;
  std::optional<int> found;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].kind != Kind::Symbol || tokens[i].text != "O") continue;
    auto is = [&](std::size_t k, Kind kind, const char* text) {
      return k < tokens.size() && tokens[k].kind == kind && (text == nullptr || tokens[k].text == text);
    };
    if (!is(i + 1, Kind::Punct, "(") || !is(i + 2, Kind::Symbol, "T")) {
      throw ParseError("malformed O-term, expected O(T^k)", tokens[i].position);
    }
    int k = 1;
    std::size_t close = i + 3;
    if (is(i + 3, Kind::Punct, "^")) {
      if (!is(i + 4, Kind::Integer, nullptr)) {
        throw ParseError("expected integer exponent in O-term", tokens[i].position);
      }
      k = std::stoi(tokens[i + 4].text);
      close = i + 5;
    }
    if (!is(close, Kind::Punct, ")")) throw ParseError("expected ')' closing O-term", tokens[i].position);
    if (k < 1) throw ParseError("O(T^k) needs k >= 1", tokens[i].position);
    found = found ? std::min(*found, k) : k;
  }
  return found;
}

// Coefficient text for the T^k term, k >= 1, including the separator.
void append_series_term(std::ostringstream& out, const MotivicClass& c, int k, bool first) {
  std::string monomial = k == 1 ? "T" : "T^" + std::to_string(k);
  const bool single_polynomial_term = c.is_laurent_polynomial() && c.numerator().is_monomial();
  if (single_polynomial_term && c.numerator().terms()[0].coefficient < 0) {
    out << (first ? "-" : " - ");
    const MotivicClass magnitude = -c;
    if (!magnitude.is_one()) out << format_class(magnitude) << '*';
    out << monomial;
    return;
  }
  if (!first) out << " + ";
  if (c.is_one()) {
    out << monomial;
  } else if (single_polynomial_term) {
    out << format_class(c) << '*' << monomial;
  } else {
    out << '(' << format_class(c) << ")*" << monomial;
  }
}

}  // namespace

TruncatedSeries parse_series(std::string_view text, std::optional<int> order) {
  auto tokens = detail::tokenize(text);
  auto precision = declared_precision(tokens);
  int effective_order = 0;
  if (precision && order) {
    effective_order = std::min(*precision - 1, *order);
  } else if (precision) {
    effective_order = *precision - 1;
  } else if (order) {
    effective_order = *order;
  } else {
    throw ParseError("series needs an O(T^k) term or an explicit order", text.size());
  }
  if (effective_order < 0) throw InvalidArgument("series order must be nonnegative");
  SeriesRing ring{effective_order};
  detail::ExpressionParser<SeriesRing> parser(ring, std::move(tokens));
  return parser.parse();
}

std::string format_series(const TruncatedSeries& a) {
  std::ostringstream out;
  bool first = true;
  if (!a[0].is_zero()) {
    out << format_class(a[0]);
    first = false;
  }
  for (int k = 1; k <= a.order(); ++k) {
    if (a[k].is_zero()) continue;
    append_series_term(out, a[k], k, first);
    first = false;
  }
  const int precision = a.order() + 1;
  if (!first) out << " + ";
  out << (precision == 1 ? std::string("O(T)") : "O(T^" + std::to_string(precision) + ")");
  return out.str();
}

}  // namespace motivic
