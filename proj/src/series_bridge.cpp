#include "igusa/series_bridge.hpp"

#include <utility>

namespace igusa {

RationalFunction zeta_to_poincare(const RationalFunction& zeta) {
  // t Z - 1 = (t num - den) / den
  const Polynomial shifted = Polynomial::t() * zeta.num() - zeta.den();
  const Polynomial t_minus_one({BigRational(-1), BigRational(1)});
  auto [quotient, remainder] = divmod(shifted, t_minus_one);
  if (!remainder.is_zero()) {
    throw NotAZetaFunction("Z(1) != 1: t Z(t) - 1 is not divisible by t - 1");
  }
  return RationalFunction(std::move(quotient), zeta.den());
}

RationalFunction poincare_to_zeta(const RationalFunction& poincare) {
  const Polynomial& num = poincare.num();
  const Polynomial& den = poincare.den();
  if (den.coeff(0) == 0 || num.coeff(0) != den.coeff(0)) {
    throw NotAPoincareSeries("P(0) != 1");
  }
  // (P - 1) / t = ((num - den) / t) / den; the constant term of num - den is zero.
  const Polynomial diff = num - den;
  std::vector<BigRational> lowered;
  if (!diff.is_zero()) lowered.assign(diff.coeffs().begin() + 1, diff.coeffs().end());
  return poincare - RationalFunction(Polynomial(std::move(lowered)), den);
}

std::vector<BigRational> poincare_coeffs_oracle(const ZetaParams& params, std::uint32_t terms,
                                                std::uint64_t budget) {
  const auto counts = count_ne_sequence(params, terms, budget);
  std::vector<BigRational> out;
  out.reserve(terms);
  for (std::uint32_t e = 0; e < terms; ++e) {
    out.push_back(from_count(counts[e]) * inverse_power(params.p(), 2ULL * e));
  }
  return out;
}

}  // namespace igusa
