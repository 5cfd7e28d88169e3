#include "igusa/zeta_closed.hpp"

#include <string>

namespace igusa {

namespace {

void require_supported(const ZetaParams& params) {
  if (params.p_divides_both()) {
    throw UnsupportedPrime("p = " + std::to_string(params.p()) + " divides both n = " +
                           std::to_string(params.n()) + " and m = " + std::to_string(params.m()));
  }
}

// 1 - p^{-1} t
Polynomial one_minus_t_over_p(std::uint64_t p) {
  return Polynomial({BigRational(1), -inverse_power(p, 1)});
}

// sum_{j < count} p^{-floor(j*step/base) - j} t^{step*j}
Polynomial staircase(std::uint32_t step, std::uint32_t base, std::uint32_t count, std::uint64_t p) {
  Polynomial sum;
  for (std::uint32_t j = 0; j < count; ++j) {
    const std::uint64_t drop = static_cast<std::uint64_t>(j) * step / base + j;
    sum += Polynomial::monomial(inverse_power(p, drop), static_cast<std::size_t>(step) * j);
  }
  return sum;
}

}  // namespace

RationalFunction zeta_monomial(std::uint32_t exponent, std::uint64_t p) {
  if (exponent == 0) throw InvalidParams("monomial exponent must be positive");
  if (!is_prime(p)) throw InvalidParams(std::to_string(p) + " is not prime");
  const BigRational q = inverse_power(p, 1);
  return RationalFunction(Polynomial::constant(1 - q),
                          Polynomial::constant(1) - Polynomial::monomial(q, exponent));
}

Polynomial diagonal_period(const ZetaParams& params) {
  const std::uint32_t d = params.d();
  const std::uint64_t weight = (static_cast<std::uint64_t>(params.m()) + params.n()) / d;
  const std::size_t degree = static_cast<std::size_t>(params.m()) * params.n() / d;
  return Polynomial::constant(1) - Polynomial::monomial(inverse_power(params.p(), weight), degree);
}

RationalFunction i12_part(const ZetaParams& params) {
  const std::uint32_t n = params.n();
  const std::uint32_t m = params.m();
  const std::uint32_t d = params.d();
  const std::uint64_t p = params.p();

  Polynomial bracket = staircase(m, n, n / d, p) + staircase(n, m, m / d, p);
  const BigRational q = inverse_power(p, 1);
  const BigRational scale = (1 - q) * q;
  return RationalFunction(bracket * scale, diagonal_period(params));
}

RationalFunction i3_prime(const ZetaParams& params, std::uint64_t n0) {
  require_supported(params);
  const std::uint64_t p = params.p();
  const BigRational q = inverse_power(p, 1);
  const BigRational q2 = inverse_power(p, 2);
  const BigRational unit_zeros = from_count(n0) - 1;

  const BigRational nonzero = (BigRational(from_count(p - 1)) * from_count(p - 1) - unit_zeros) * q2;
  const RationalFunction lifted(Polynomial::monomial(unit_zeros * (1 - q) * q2, 1),
                                one_minus_t_over_p(p));
  return RationalFunction::constant(nonzero) + lifted;
}

RationalFunction zeta_closed_form(const ZetaParams& params) {
  require_supported(params);
  return zeta_closed_form(params, n0_theorem(params));
}

RationalFunction zeta_closed_form(const ZetaParams& params, std::uint64_t n0) {
  return i12_part(params) + i3_prime(params, n0).div_exact_by(diagonal_period(params));
}

std::optional<std::string_view> paper_condition(const ZetaParams& params) {
  if (params.p_divides_exactly_one()) return "one_exponent_divisible";
  return std::nullopt;
}

}  // namespace igusa
