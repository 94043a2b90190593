#pragma once

// Recursive-descent parser shared by the class and series text formats.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' ['-' | '+'] INTEGER)?
//   primary := INTEGER | SYMBOL | '(' expr ')'
//
// `^` binds tighter than unary minus, so -L^2 is -(L^2). The ring policy
// supplies integer literals, symbols and arithmetic; `O(...)` is handled by
// the policy through `special_form`.

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "motivic/errors.hpp"

namespace motivic::detail {

struct Token {
  enum class Kind { Integer, Symbol, Punct, End };
  Kind kind;
  std::string text;
  std::size_t position;
};

inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      tokens.push_back({Token::Kind::Integer, std::string(text.substr(start, i - start)), start});
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      tokens.push_back({Token::Kind::Symbol, std::string(1, c), i});
      ++i;
    } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      tokens.push_back({Token::Kind::Punct, std::string(1, c), i});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  tokens.push_back({Token::Kind::End, "", text.size()});
  return tokens;
}

template <typename Ring>
class ExpressionParser {
 public:
  using Value = typename Ring::Value;

  ExpressionParser(const Ring& ring, std::vector<Token> tokens)
      : ring_(ring), tokens_(std::move(tokens)) {}

  Value parse() {
    if (peek().kind == Token::Kind::End) throw ParseError("empty expression", peek().position);
    Value v = expr();
    if (peek().kind != Token::Kind::End) {
      throw ParseError("unexpected '" + peek().text + "'", peek().position);
    }
    return v;
  }

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t k = pos_ + ahead;
    return k < tokens_.size() ? tokens_[k] : tokens_.back();
  }
  const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  bool accept(const char* punct) {
    if (peek().kind == Token::Kind::Punct && peek().text == punct) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(const char* punct) {
    if (!accept(punct)) {
      throw ParseError(std::string("expected '") + punct + "'", peek().position);
    }
  }

  long integer_literal() {
    const Token& t = peek();
    if (t.kind != Token::Kind::Integer) throw ParseError("expected integer", t.position);
    ++pos_;
    try {
      return std::stol(t.text);
    } catch (const std::out_of_range&) {
      throw ParseError("integer too large", t.position);
    }
  }

 private:
  Value expr() {
    Value v = term();
    for (;;) {
      if (accept("+")) {
        v = ring_.add(v, term());
      } else if (accept("-")) {
        v = ring_.sub(v, term());
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (accept("*")) {
        v = ring_.mul(v, unary());
      } else if (peek().kind == Token::Kind::Punct && peek().text == "/") {
        const std::size_t at = advance().position;
        v = ring_.div(v, unary(), at);
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (accept("-")) return ring_.neg(unary());
    if (accept("+")) return unary();
    return power();
  }

  Value power() {
    Value base = primary();
    if (peek().kind == Token::Kind::Punct && peek().text == "^") {
      const std::size_t at = advance().position;
      long sign = 1;
      if (accept("-")) {
        sign = -1;
      } else {
        accept("+");
      }
      return ring_.pow(base, sign * integer_literal(), at);
    }
    return base;
  }

  Value primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::Integer:
        ++pos_;
        return ring_.integer(mpz_class(t.text));
      case Token::Kind::Symbol:
        if (ring_.is_special_form(t.text)) return ring_.special_form(*this);
        ++pos_;
        return ring_.symbol(t.text, t.position);
      case Token::Kind::Punct:
        if (accept("(")) {
          Value v = expr();
          expect(")");
          return v;
        }
        break;
      case Token::Kind::End:
        throw ParseError("unexpected end of input", t.position);
    }
    throw ParseError("unexpected '" + t.text + "'", t.position);
  }

  const Ring& ring_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace motivic::detail
