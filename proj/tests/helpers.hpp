#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "igusa/exact.hpp"

namespace igusa::test {

inline BigRational q(long num, long den = 1) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

inline Polynomial poly(std::initializer_list<BigRational> coeffs) {
  return Polynomial(std::vector<BigRational>(coeffs));
}

inline std::vector<BigRational> qs(std::initializer_list<BigRational> v) { return v; }

/// Small random polynomial with integer-over-small-denominator coefficients.
inline Polynomial random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 5);
  std::vector<BigRational> c(deg(rng) + 1);
  for (auto& x : c) x = q(num(rng), den(rng));
  return Polynomial(std::move(c));
}

inline Polynomial random_nonzero_poly(std::mt19937& rng, int max_degree) {
  Polynomial p;
  while (p.is_zero()) p = random_poly(rng, max_degree);
  return p;
}

}  // namespace igusa::test
