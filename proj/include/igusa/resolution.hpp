#pragma once

#include <array>
#include <cstdint>

#include "igusa/exact.hpp"

namespace igusa {

/// Chart contributions Z_1..Z_4 of the embedded resolution of x^3 + y^2 at p.
std::array<RationalFunction, 4> resolution_pieces(std::uint64_t p);

/// (1-p^{-1})(1 - p^{-2} t + p^{-2} t^2 - p^{-5} t^5) / ((1 - p^{-1} t)(1 - p^{-5} t^6))
RationalFunction resolution_zeta(std::uint64_t p);

}  // namespace igusa
