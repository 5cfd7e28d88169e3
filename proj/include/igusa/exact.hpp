#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "igusa/errors.hpp"

namespace igusa {

/// Exact rational number. GMP keeps it in lowest terms with a positive denominator
/// as long as every value goes through canonicalize() after construction from parts.
using BigRational = mpq_class;

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "counts are passed to GMP as unsigned long");

inline BigRational from_count(std::uint64_t v) { return BigRational(static_cast<unsigned long>(v)); }

/// p^{-k} as an exact rational.
BigRational inverse_power(std::uint64_t p, std::uint64_t k);

/// Dense univariate polynomial in t with exact rational coefficients.
///
/// coeffs()[k] is the coefficient of t^k. Trailing zeros are stripped, so the
/// zero polynomial has an empty coefficient vector and degree() == -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigRational> coeffs);

  static Polynomial constant(const BigRational& c);
  static Polynomial monomial(const BigRational& c, std::size_t degree);
  /// The indeterminate t.
  static Polynomial t();

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }
  /// Coefficient of t^k, zero past the degree.
  BigRational coeff(std::size_t k) const;
  const BigRational& leading() const;

  BigRational operator()(const BigRational& x) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const BigRational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const BigRational& c) { return a *= c; }
  friend Polynomial operator*(const BigRational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a);

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<BigRational> coeffs_;
};

struct PolynomialDivision {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division over Q. Throws DivisionByZeroPolynomial when divisor is zero.
PolynomialDivision divmod(const Polynomial& dividend, const Polynomial& divisor);

/// Monic gcd over Q; gcd(0, 0) is the zero polynomial.
Polynomial gcd(Polynomial a, Polynomial b);

/// Quotient num/den of polynomials in t, kept in canonical form:
///   - gcd(num, den) = 1
///   - den(0) = 1 when den(0) != 0, otherwise den is monic
///   - the zero function is stored as 0/1
class RationalFunction {
 public:
  /// The zero function.
  RationalFunction();
  RationalFunction(Polynomial num);  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction constant(const BigRational& c);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Exact value at x. Throws PoleError when den(x) = 0.
  BigRational eval(const BigRational& x) const;

  /// First `terms` Taylor coefficients at t = 0. Throws PoleAtZero when den(0) = 0.
  std::vector<BigRational> taylor(std::size_t terms) const;

  /// this / divisor. Throws DivisionByZeroPolynomial for a zero divisor.
  RationalFunction div_exact_by(const Polynomial& divisor) const;

  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(const RationalFunction& a);

  /// Equality of functions, decided by cross-multiplication.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

 private:
  void canonicalize();

  Polynomial num_;
  Polynomial den_;
};

}  // namespace igusa
