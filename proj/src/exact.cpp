#include "igusa/exact.hpp"

#include <algorithm>
#include <utility>

namespace igusa {

BigRational inverse_power(std::uint64_t p, std::uint64_t k) {
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), p, k);
  BigRational r(mpz_class(1), power);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial Polynomial::constant(const BigRational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const BigRational& c, std::size_t degree) {
  std::vector<BigRational> coeffs(degree + 1);
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::t() { return monomial(1, 1); }

BigRational Polynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigRational(0);
}

const BigRational& Polynomial::leading() const {
  if (is_zero()) throw InternalError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

BigRational Polynomial::operator()(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigRational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const BigRational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

Polynomial operator-(Polynomial a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

PolynomialDivision divmod(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw DivisionByZeroPolynomial("polynomial division by zero");
  std::vector<BigRational> rem = dividend.coeffs();
  const auto& dc = divisor.coeffs();
  const std::size_t dn = dc.size();
  if (rem.size() < dn) return {Polynomial(), dividend};

  std::vector<BigRational> quot(rem.size() - dn + 1);
  const BigRational lead_inv = 1 / divisor.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigRational q = rem[k + dn - 1] * lead_inv;
    if (q == 0) continue;
    for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= q * dc[j];
    quot[k] = q;
  }
  rem.resize(dn - 1);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  const BigRational inv = 1 / a.leading();
  return a * inv;
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction() : den_(Polynomial::constant(1)) {}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZeroPolynomial("rational function with zero denominator");
  canonicalize();
}

RationalFunction RationalFunction::constant(const BigRational& c) {
  return RationalFunction(Polynomial::constant(c));
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  Polynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).quotient;
    den_ = divmod(den_, g).quotient;
  }
  const BigRational& lead = den_.coeffs().front() != 0 ? den_.coeffs().front() : den_.leading();
  if (lead != 1) {
    const BigRational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

BigRational RationalFunction::eval(const BigRational& x) const {
  BigRational d = den_(x);
  if (d == 0) throw PoleError("rational function has a pole at " + x.get_str());
  BigRational r = num_(x) / d;
  return r;
}

std::vector<BigRational> RationalFunction::taylor(std::size_t terms) const {
  if (den_.coeff(0) == 0) throw PoleAtZero("rational function has a pole at t = 0");
  // den(0) is 1 in canonical form: c_k = num_k - sum_{j>=1} den_j c_{k-j}.
  const auto& dc = den_.coeffs();
  std::vector<BigRational> out(terms);
  for (std::size_t k = 0; k < terms; ++k) {
    BigRational c = num_.coeff(k);
    for (std::size_t j = 1; j < dc.size() && j <= k; ++j) c -= dc[j] * out[k - j];
    out[k] = c / dc[0];
  }
  return out;
}

RationalFunction RationalFunction::div_exact_by(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw DivisionByZeroPolynomial("division of a rational function by zero");
  return RationalFunction(num_, den_ * divisor);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (den_ == rhs.den_) {
    *this = RationalFunction(num_ + rhs.num_, den_);
  } else {
    *this = RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  }
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  *this = RationalFunction(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.is_zero()) throw DivisionByZeroPolynomial("division by the zero rational function");
  *this = RationalFunction(num_ * rhs.den_, den_ * rhs.num_);
  return *this;
}

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction r = a;
  r.num_ = -r.num_;
  return r;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

}  // namespace igusa
