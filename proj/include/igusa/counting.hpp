#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "igusa/exact.hpp"

namespace igusa {

/// Default cap on the number of points any single enumeration may visit.
inline constexpr std::uint64_t kDefaultBudget = 200'000'000;

/// Deterministic trial division.
bool is_prime(std::uint64_t n);

/// base^exp mod modulus, with 0^0 = 1.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus);

/// The instance f(x, y) = x^n + y^m at the prime p.
class ZetaParams {
 public:
  /// Throws InvalidParams unless n, m >= 1 and p is prime.
  ZetaParams(std::uint32_t n, std::uint32_t m, std::uint64_t p);

  std::uint32_t n() const { return n_; }
  std::uint32_t m() const { return m_; }
  std::uint64_t p() const { return p_; }
  /// gcd(n, m).
  std::uint32_t d() const;

  bool p_divides_both() const { return n_ % p_ == 0 && m_ % p_ == 0; }
  bool p_divides_exactly_one() const { return (n_ % p_ == 0) != (m_ % p_ == 0); }

  ZetaParams swapped() const { return ZetaParams(m_, n_, p_); }

  friend auto operator<=>(const ZetaParams&, const ZetaParams&) = default;

 private:
  std::uint32_t n_;
  std::uint32_t m_;
  std::uint64_t p_;
};

struct ModPointCounts {
  std::uint64_t n0 = 0;  ///< zeros of g in F_p^2
  std::uint64_t s0 = 0;  ///< zeros where both partials vanish
  friend bool operator==(const ModPointCounts&, const ModPointCounts&) = default;
};

/// |N(0)| from the closed formula
///   1 + (p-1) gcd(m, n, p-1)   if p = 2 or ord_2(p-1) > min(ord_2 m, ord_2 n)
///   1                          otherwise.
std::uint64_t n0_theorem(const ZetaParams& params);

/// |N(0)| by enumerating F_p^2.
std::uint64_t n0_bruteforce(const ZetaParams& params);

/// Singular zeros mod p of g = p^a x^n + p^b y^m, in lexicographic order.
std::vector<std::pair<std::uint64_t, std::uint64_t>> singular_zeros(
    std::uint32_t a, std::uint32_t b, const ZetaParams& params);

/// Zero and singular-zero counts of g = p^a x^n + p^b y^m over F_p. Requires min(a, b) = 0.
ModPointCounts singular_counts(std::uint32_t a, std::uint32_t b, const ZetaParams& params);

/// |N_e|: residue pairs mod p^e (zero class included) with x^n + y^m = 0 mod p^e.
/// Visits p^{2e} points; throws BudgetExceeded if that is more than `budget`.
std::uint64_t count_ne(const ZetaParams& params, std::uint32_t e,
                       std::uint64_t budget = kDefaultBudget);

/// [|N_0|, ..., |N_{levels-1}|].
std::vector<std::uint64_t> count_ne_sequence(const ZetaParams& params, std::uint32_t levels,
                                             std::uint64_t budget = kDefaultBudget);

/// Whether p^{2e} fits in the budget.
bool enumeration_fits(std::uint64_t p, std::uint32_t e, std::uint64_t budget = kDefaultBudget);

/// Annulus measures c_e = |N_e| p^{-2e} - |N_{e+1}| p^{-2(e+1)} for e < terms,
/// i.e. the Taylor coefficients of Z(t) obtained by counting.
std::vector<BigRational> measure_coeffs(const ZetaParams& params, std::uint32_t terms,
                                        std::uint64_t budget = kDefaultBudget);

/// One-variable analogue for f(x) = x^N.
std::vector<BigRational> monomial_measure_coeffs(std::uint32_t exponent, std::uint64_t p,
                                                 std::uint32_t terms,
                                                 std::uint64_t budget = kDefaultBudget);

}  // namespace igusa
