#pragma once

#include <stdexcept>
#include <string>

namespace qtrunc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact division was requested but the divisor leaves a nonzero remainder.
class NotDivisibleError : public Error {
 public:
  using Error::Error;
};

/// A rational function was expected to be a Laurent polynomial but is not.
class NotPolynomialError : public Error {
 public:
  using Error::Error;
};

/// Division by an identically vanishing quantity (a zero denominator or a
/// vanishing Pochhammer factor under a negative index).
class ZeroDivisionError : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace qtrunc
