#pragma once

#include <stdexcept>
#include <string>

namespace octo {

// A mathematically invalid request: zero divisor, point outside the ball,
// non-unit triality factor, unnormalized M word, ...
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised on the rational backend when a square root is requested whose
// argument is not the square of a rational.
class InexactError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Malformed literal. The message always quotes the offending token.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace octo
