#include "motivic/text.hpp"

#include <sstream>

#include "expression_parser.hpp"

namespace motivic {

namespace {

struct ClassRing {
  using Value = MotivicClass;

  Value integer(const mpz_class& n) const { return n; }
  Value symbol(const std::string& name, std::size_t position) const {
    if (name != "L") throw ParseError("unknown symbol '" + name + "'", position);
    return MotivicClass::lefschetz();
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value neg(const Value& a) const { return -a; }
  Value div(const Value& a, const Value& b, std::size_t position) const {
    if (b.is_zero()) throw ParseError("division by zero", position);
    return a / b;
  }
  Value pow(const Value& a, long e, std::size_t position) const {
    if (e < 0 && a.is_zero()) throw ParseError("zero raised to a negative power", position);
    if (e > 100000 || e < -100000) throw ParseError("exponent too large", position);
    return motivic::pow(a, static_cast<int>(e));
  }
  bool is_special_form(const std::string&) const { return false; }
  template <typename Parser>
  Value special_form(Parser&) const {
    return {};
  }
};

void append_term(std::ostringstream& out, const MotivicPolynomial::Term& t, bool first) {
  mpz_class magnitude = abs(t.coefficient);
  if (t.coefficient < 0) {
    out << (first ? "-" : " - ");
  } else if (!first) {
    out << " + ";
  }
  if (t.exponent == 0) {
    out << magnitude.get_str();
    return;
  }
  if (magnitude != 1) out << magnitude.get_str() << '*';
  out << 'L';
  if (t.exponent != 1) out << '^' << t.exponent;
}

}  // namespace

MotivicClass parse_class(std::string_view text) {
  ClassRing ring;
  detail::ExpressionParser<ClassRing> parser(ring, detail::tokenize(text));
  return parser.parse();
}

std::string format_polynomial(const MotivicPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    append_term(out, *it, first);
    first = false;
  }
  return out.str();
}

std::string format_class(const MotivicClass& a) {
  if (a.is_laurent_polynomial()) return format_polynomial(a.numerator());
  std::string num = format_polynomial(a.numerator());
  std::string den = format_polynomial(a.denominator());
  if (a.numerator().size() > 1) num = "(" + num + ")";
  if (a.denominator().size() > 1) den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace motivic
