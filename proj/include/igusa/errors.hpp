#pragma once

#include <stdexcept>

namespace igusa {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

class PoleAtZero : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroPolynomial : public Error {
 public:
  using Error::Error;
};

/// Bad (n, m, p): zero exponent or composite modulus.
class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// Raised instead of truncating when an enumeration would exceed its point budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// p divides both exponents; the closed form and SPF recursion do not apply.
class UnsupportedPrime : public Error {
 public:
  using Error::Error;
};

class NonTermination : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

class NotAZetaFunction : public Error {
 public:
  using Error::Error;
};

class NotAPoincareSeries : public Error {
 public:
  using Error::Error;
};

}  // namespace igusa
