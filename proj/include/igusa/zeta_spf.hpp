#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "igusa/counting.hpp"
#include "igusa/exact.hpp"

namespace igusa {

/// Exponent pair of J(a, b) = integral over Z_p^2 of |p^a x^n + p^b y^m|^s.
/// Normalized states have min(a, b) = 0.
struct SpfState {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  friend bool operator==(const SpfState&, const SpfState&) = default;
};

/// Shape of the singular zero set of g = p^a x^n + p^b y^m mod p.
enum class SingularLocus { None, Origin, LineXZero, LineYZero };

/// One application of the stationary phase formula to J(state):
///   J(state) = known + carry * t^{t_power} * J(next)
/// When next is empty the integral has no singular zeros and J(state) = known.
struct SpfStep {
  SpfState state;
  ModPointCounts counts;
  SingularLocus locus = SingularLocus::None;
  RationalFunction known;
  BigRational carry = 0;
  std::uint32_t t_power = 0;
  /// Exponents after substituting x -> px and/or y -> py, before factoring out p^{min}.
  SpfState raw_next;
  std::optional<SpfState> next;
};

struct SpfTrace {
  std::vector<SpfStep> steps;
  std::size_t applications = 0;
  RationalFunction result;
};

/// Throws UnsupportedPrime when p divides both exponents, InternalError on an
/// unrecognized singular locus.
SpfStep spf_step(const SpfState& state, const ZetaParams& params);

/// Z(t) by iterating spf_step from (0, 0) until the recursion closes on (0, 0)
/// (solved as Z = A / (1 - B)) or reaches a state with no singular zeros.
SpfTrace zeta_spf(const ZetaParams& params);

}  // namespace igusa
