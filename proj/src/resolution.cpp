#include "igusa/resolution.hpp"

#include <string>

#include "igusa/counting.hpp"

namespace igusa {

namespace {

// 1 - p^{-weight} t^degree
Polynomial one_minus(std::uint64_t p, std::uint64_t weight, std::size_t degree) {
  return Polynomial::constant(1) - Polynomial::monomial(inverse_power(p, weight), degree);
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw InvalidParams(std::to_string(p) + " is not prime");
}

}  // namespace

// Three blowups resolve x^3 + y^2. The four charts that cover Z_p^2 are
//   D1 = Z_p x pZ_p:  x = xi1 eta1,  y = xi1       f = xi1^2 (1 + xi1 eta1^3),  |dx dy| = |xi1|
//   D2 = Z_p x pZ_p:  second blowup, f = xi2^3 (1 + xi2 eta2^2),                |dx dy| = |xi2|^2
//   D3 = Z_p x pZ_p:  f = xi3^6 eta3^3 (1 + eta3),                              |dx dy| = |xi3|^4 |eta3|^2
//   D4 = Z_p^2:       f = x3^6 y3^2 (1 + y3),                                   |dx dy| = |x3|^4 |y3|
// Units (1 + ...) drop out of |f|; each chart then factors into one-variable
// monomial integrals int_{Z_p} |u|^{ks+j} du = (1-p^{-1}) / (1 - p^{-j-1} t^k).
// On D4 the y3 integral splits over residues mod p: the p-2 classes away from
// 0 and -1 contribute (p-2) p^{-1}, the class of 0 gives |y3|^{2s+1} and the
// class of -1 gives |y3 + 1|^s.
std::array<RationalFunction, 4> resolution_pieces(std::uint64_t p) {
  require_prime(p);
  const BigRational q = inverse_power(p, 1);
  const Polynomial unit_measure = Polynomial::constant(1 - q);

  RationalFunction z1(unit_measure * q, one_minus(p, 2, 2));
  RationalFunction z2(unit_measure * q, one_minus(p, 3, 3));
  RationalFunction z3(Polynomial::monomial(inverse_power(p, 3) * (1 - q) * (1 - q), 3),
                      one_minus(p, 5, 6) * one_minus(p, 3, 3));

  RationalFunction inner = RationalFunction::constant((from_count(p) - 2) * q) +
                           RationalFunction(Polynomial::monomial(inverse_power(p, 2) * (1 - q), 2),
                                            one_minus(p, 2, 2)) +
                           RationalFunction(Polynomial::monomial(q * (1 - q), 1), one_minus(p, 1, 1));
  RationalFunction z4 = RationalFunction(unit_measure, one_minus(p, 5, 6)) * inner;
  return {z1, z2, z3, z4};
}

// Sum of the four pieces over a common denominator. The top numerator term is
// p^{-5} t^5; a t^6 there still gives Z(1) = 1 but breaks every series coefficient
// from t^5 on.
RationalFunction resolution_zeta(std::uint64_t p) {
  require_prime(p);
  const BigRational q = inverse_power(p, 1);
  const BigRational q2 = inverse_power(p, 2);
  Polynomial num({BigRational(1), -q2, q2, 0, 0, -inverse_power(p, 5)});
  return RationalFunction(num * BigRational(1 - q), one_minus(p, 1, 1) * one_minus(p, 5, 6));
}

}  // namespace igusa
