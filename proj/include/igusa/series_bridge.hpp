#pragma once

#include <cstdint>
#include <vector>

#include "igusa/counting.hpp"
#include "igusa/exact.hpp"

namespace igusa {

/// P(t) = (t Z(t) - 1) / (t - 1). Throws NotAZetaFunction unless (t - 1) divides
/// t Z - 1 exactly, i.e. Z(1) = 1.
RationalFunction zeta_to_poincare(const RationalFunction& zeta);

/// Z(t) = P(t) - (P(t) - 1) / t. Throws NotAPoincareSeries unless P(0) = 1.
RationalFunction poincare_to_zeta(const RationalFunction& poincare);

/// [|N_e| p^{-2e}] for e < terms, by enumeration.
std::vector<BigRational> poincare_coeffs_oracle(const ZetaParams& params, std::uint32_t terms,
                                                std::uint64_t budget = kDefaultBudget);

}  // namespace igusa
