#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "igusa/counting.hpp"
#include "igusa/exact.hpp"

namespace igusa {

/// Z(t) for f(x) = x^N in one variable: (1 - p^{-1}) / (1 - p^{-1} t^N).
RationalFunction zeta_monomial(std::uint32_t exponent, std::uint64_t p);

/// Contribution of the annuli pairs with ne != mf:
///   (1-p^{-1}) p^{-1} / (1 - p^{-(m+n)/d} t^{mn/d})
///     * [ sum_{j<n/d} p^{-floor(jm/n)-j} t^{mj} + sum_{j<m/d} p^{-floor(jn/m)-j} t^{nj} ]
RationalFunction i12_part(const ZetaParams& params);

/// Integral of |x^n + y^m|^s over pairs of units, in terms of n0 = |N(0)|:
///   [(p-1)^2 - (n0-1)] p^{-2} + (n0-1)(1-p^{-1}) p^{-2} t / (1 - p^{-1} t).
/// Throws UnsupportedPrime when p divides both exponents.
RationalFunction i3_prime(const ZetaParams& params, std::uint64_t n0);

/// 1 - p^{-(m+n)/d} t^{mn/d}, the period factor shared by every diagonal annulus.
Polynomial diagonal_period(const ZetaParams& params);

/// Z(t) = I1 + I2 + I3' / (1 - p^{-(m+n)/d} t^{mn/d}) with |N(0)| from n0_theorem.
RationalFunction zeta_closed_form(const ZetaParams& params);

/// Same, with |N(0)| supplied by the caller.
RationalFunction zeta_closed_form(const ZetaParams& params, std::uint64_t n0);

/// "one_exponent_divisible" when p divides exactly one of n, m.
std::optional<std::string_view> paper_condition(const ZetaParams& params);

}  // namespace igusa
