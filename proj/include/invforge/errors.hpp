#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace invforge {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two operands live in different variable contexts.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

// Degree or weight requested for the zero polynomial.
class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

// Weight requested for a polynomial whose terms carry different weights.
class NonIsobaric : public Error {
 public:
  using Error::Error;
};

// A negative power of x0 survived a conversion back to x-coordinates.
class ResidualDenominator : public Error {
 public:
  using Error::Error;
};

// Discovered generator degrees disagree with the requested degree table.
class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

// An argument is outside the range an operation is defined on.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

// Malformed polynomial text. position() is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace invforge
