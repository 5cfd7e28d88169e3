#include "igusa/counting.hpp"

#include <bit>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

namespace igusa {

namespace {

unsigned ord2(std::uint64_t v) { return static_cast<unsigned>(std::countr_zero(v)); }

// p^k, or nullopt on overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t p, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / p) return std::nullopt;
    r *= p;
  }
  return r;
}

void require_budget(std::uint64_t p, std::uint64_t exponent, std::uint64_t budget) {
  auto points = checked_pow(p, exponent);
  if (!points || *points > budget) {
    throw BudgetExceeded("enumeration of " + std::to_string(p) + "^" + std::to_string(exponent) +
                         " points exceeds the budget of " + std::to_string(budget));
  }
}

std::vector<std::uint64_t> power_table(std::uint64_t exponent, std::uint64_t modulus) {
  std::vector<std::uint64_t> table(modulus);
  for (std::uint64_t v = 0; v < modulus; ++v) table[v] = pow_mod(v, exponent, modulus);
  return table;
}

std::uint64_t count_unchecked(const ZetaParams& params, std::uint32_t e) {
  if (e == 0) return 1;
  const std::uint64_t q = *checked_pow(params.p(), e);
  const auto xs = power_table(params.n(), q);
  const auto ys = power_table(params.m(), q);
  std::uint64_t count = 0;
  for (std::uint64_t xv : xs) {
    const std::uint64_t target = xv == 0 ? 0 : q - xv;
    for (std::uint64_t yv : ys) count += (yv == target);
  }
  return count;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus) {
  __extension__ typedef unsigned __int128 u128;
  std::uint64_t result = 1 % modulus;
  std::uint64_t b = base % modulus;
  while (exp > 0) {
    if (exp & 1) result = static_cast<std::uint64_t>(static_cast<u128>(result) * b % modulus);
    b = static_cast<std::uint64_t>(static_cast<u128>(b) * b % modulus);
    exp >>= 1;
  }
  return result;
}

ZetaParams::ZetaParams(std::uint32_t n, std::uint32_t m, std::uint64_t p) : n_(n), m_(m), p_(p) {
  if (n == 0 || m == 0) throw InvalidParams("exponents n and m must be positive");
  if (!is_prime(p)) throw InvalidParams(std::to_string(p) + " is not prime");
}

std::uint32_t ZetaParams::d() const { return std::gcd(n_, m_); }

std::uint64_t n0_theorem(const ZetaParams& params) {
  const std::uint64_t p = params.p();
  if (p == 2 || ord2(p - 1) > std::min(ord2(params.m()), ord2(params.n()))) {
    const std::uint64_t g = std::gcd(std::gcd<std::uint64_t>(params.m(), params.n()), p - 1);
    return 1 + (p - 1) * g;
  }
  return 1;
}

std::uint64_t n0_bruteforce(const ZetaParams& params) {
  const std::uint64_t p = params.p();
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < p; ++x)
    for (std::uint64_t y = 0; y < p; ++y)
      if ((pow_mod(x, params.n(), p) + pow_mod(y, params.m(), p)) % p == 0) ++count;
  return count;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> singular_zeros(
    std::uint32_t a, std::uint32_t b, const ZetaParams& params) {
  const std::uint64_t p = params.p();
  const std::uint64_t n = params.n();
  const std::uint64_t m = params.m();
  // p^a mod p
  const std::uint64_t ca = a == 0 ? 1 : 0;
  const std::uint64_t cb = b == 0 ? 1 : 0;

  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t x = 0; x < p; ++x) {
    for (std::uint64_t y = 0; y < p; ++y) {
      const std::uint64_t g = (ca * pow_mod(x, n, p) + cb * pow_mod(y, m, p)) % p;
      if (g != 0) continue;
      const std::uint64_t gx = ca * (n % p) % p * pow_mod(x, n - 1, p) % p;
      const std::uint64_t gy = cb * (m % p) % p * pow_mod(y, m - 1, p) % p;
      if (gx == 0 && gy == 0) out.emplace_back(x, y);
    }
  }
  return out;
}

ModPointCounts singular_counts(std::uint32_t a, std::uint32_t b, const ZetaParams& params) {
  if (std::min(a, b) != 0) throw InvalidParams("singular_counts requires min(a, b) = 0");
  const std::uint64_t p = params.p();
  const std::uint64_t ca = a == 0 ? 1 : 0;
  const std::uint64_t cb = b == 0 ? 1 : 0;
  ModPointCounts counts;
  for (std::uint64_t x = 0; x < p; ++x)
    for (std::uint64_t y = 0; y < p; ++y)
      if ((ca * pow_mod(x, params.n(), p) + cb * pow_mod(y, params.m(), p)) % p == 0) ++counts.n0;
  counts.s0 = singular_zeros(a, b, params).size();
  return counts;
}

bool enumeration_fits(std::uint64_t p, std::uint32_t e, std::uint64_t budget) {
  auto points = checked_pow(p, 2ULL * e);
  return points && *points <= budget;
}

std::uint64_t count_ne(const ZetaParams& params, std::uint32_t e, std::uint64_t budget) {
  require_budget(params.p(), 2ULL * e, budget);
  return count_unchecked(params, e);
}

std::vector<std::uint64_t> count_ne_sequence(const ZetaParams& params, std::uint32_t levels,
                                             std::uint64_t budget) {
  if (levels == 0) return {};
  require_budget(params.p(), 2ULL * (levels - 1), budget);
  std::vector<std::uint64_t> out;
  out.reserve(levels);
  for (std::uint32_t e = 0; e < levels; ++e) out.push_back(count_unchecked(params, e));
  return out;
}

std::vector<BigRational> measure_coeffs(const ZetaParams& params, std::uint32_t terms,
                                        std::uint64_t budget) {
  const auto counts = count_ne_sequence(params, terms + 1, budget);
  std::vector<BigRational> out;
  out.reserve(terms);
  for (std::uint32_t e = 0; e < terms; ++e) {
    BigRational here = from_count(counts[e]) * inverse_power(params.p(), 2ULL * e);
    BigRational next =
        from_count(counts[e + 1]) * inverse_power(params.p(), 2ULL * (e + 1));
    out.emplace_back(here - next);
  }
  return out;
}

std::vector<BigRational> monomial_measure_coeffs(std::uint32_t exponent, std::uint64_t p,
                                                 std::uint32_t terms, std::uint64_t budget) {
  if (exponent == 0) throw InvalidParams("monomial exponent must be positive");
  if (!is_prime(p)) throw InvalidParams(std::to_string(p) + " is not prime");
  require_budget(p, terms, budget);

  std::vector<std::uint64_t> counts;
  for (std::uint32_t e = 0; e <= terms; ++e) {
    const std::uint64_t q = *checked_pow(p, e);
    std::uint64_t zeros = 0;
    for (std::uint64_t x = 0; x < q; ++x) zeros += (pow_mod(x, exponent, q) == 0);
    counts.push_back(zeros);
  }
  std::vector<BigRational> out;
  for (std::uint32_t e = 0; e < terms; ++e) {
    BigRational c = from_count(counts[e]) * inverse_power(p, e) -
                    from_count(counts[e + 1]) * inverse_power(p, e + 1);
    out.push_back(c);
  }
  return out;
}

}  // namespace igusa
