#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace motivic {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

// Evaluation hit a zero of the denominator (or L = 0 with negative powers).
class PoleError : public Error {
 public:
  using Error::Error;
};

// An exponent outside Z[L, 1/L] reached the power structure.
class UnsupportedExponent : public Error {
 public:
  using Error::Error;
};

// A precondition on a numeric argument was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Point-count data that cannot come from a variety.
class InconsistentTable : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace motivic
