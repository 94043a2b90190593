#pragma once

#include <string>
#include <string_view>

#include "motivic/motivic_class.hpp"

namespace motivic {

/// Parses a class expression: integers, the symbol L, `+ - * / ^` and
/// parentheses. Exponents are integer literals (negative allowed).
/// Throws ParseError with the offending position.
MotivicClass parse_class(std::string_view text);

/// Descending powers of L, e.g. `L^2 - L`, `-L^-1 + 3`; fractions print as
/// `num/den` with multi-term parts parenthesized, e.g. `1/(L - 1)`.
std::string format_class(const MotivicClass& a);
std::string format_polynomial(const MotivicPolynomial& p);

}  // namespace motivic
