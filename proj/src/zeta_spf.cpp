#include "igusa/zeta_spf.hpp"

#include <algorithm>
#include <string>

namespace igusa {

namespace {

SingularLocus classify(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& zeros,
                       std::uint64_t p) {
  if (zeros.empty()) return SingularLocus::None;
  const bool x_zero = std::all_of(zeros.begin(), zeros.end(), [](const auto& z) { return z.first == 0; });
  const bool y_zero = std::all_of(zeros.begin(), zeros.end(), [](const auto& z) { return z.second == 0; });
  if (zeros.size() == 1 && x_zero && y_zero) return SingularLocus::Origin;
  if (zeros.size() == p && x_zero) return SingularLocus::LineXZero;
  if (zeros.size() == p && y_zero) return SingularLocus::LineYZero;
  throw InternalError("unrecognized singular locus with " + std::to_string(zeros.size()) + " points");
}

// (p^2 - n0) p^{-2} + (n0 - s0) p^{-2} t (1 - p^{-1}) / (1 - p^{-1} t)
RationalFunction smooth_part(const ModPointCounts& counts, std::uint64_t p) {
  const BigRational q = inverse_power(p, 1);
  const BigRational q2 = inverse_power(p, 2);
  const BigRational nonzero = (from_count(p) * from_count(p) - from_count(counts.n0)) * q2;
  const BigRational lifted = (from_count(counts.n0) - from_count(counts.s0)) * q2 * (1 - q);
  return RationalFunction::constant(nonzero) +
         RationalFunction(Polynomial::monomial(lifted, 1), Polynomial({BigRational(1), -q}));
}

}  // namespace

SpfStep spf_step(const SpfState& state, const ZetaParams& params) {
  if (params.p_divides_both()) {
    throw UnsupportedPrime("p = " + std::to_string(params.p()) + " divides both exponents");
  }
  if (std::min(state.a, state.b) != 0) throw InvalidParams("SPF state must have min(a, b) = 0");

  const std::uint64_t p = params.p();
  SpfStep step;
  step.state = state;
  const auto zeros = singular_zeros(state.a, state.b, params);
  step.counts = singular_counts(state.a, state.b, params);
  step.locus = classify(zeros, p);
  step.known = smooth_part(step.counts, p);

  // The singular set S is a union of cosets; rescaling the vanishing coordinates
  // maps it onto Z_p^2 and multiplies the measure by p^{-1} per coordinate.
  switch (step.locus) {
    case SingularLocus::None:
      return step;
    case SingularLocus::Origin:
      step.carry = inverse_power(p, 2);
      step.raw_next = {state.a + params.n(), state.b + params.m()};
      break;
    case SingularLocus::LineXZero:
      step.carry = inverse_power(p, 1);
      step.raw_next = {state.a + params.n(), state.b};
      break;
    case SingularLocus::LineYZero:
      step.carry = inverse_power(p, 1);
      step.raw_next = {state.a, state.b + params.m()};
      break;
  }
  step.t_power = std::min(step.raw_next.a, step.raw_next.b);
  step.next = SpfState{step.raw_next.a - step.t_power, step.raw_next.b - step.t_power};
  return step;
}

SpfTrace zeta_spf(const ZetaParams& params) {
  const std::size_t cap = params.n() / params.d() + params.m() / params.d();

  // Invariant: Z = accumulated + weight * J(state).
  RationalFunction accumulated;
  RationalFunction weight = RationalFunction::constant(1);
  SpfState state{0, 0};
  SpfTrace trace;

  while (true) {
    if (trace.steps.size() >= cap) {
      throw NonTermination("stationary phase recursion exceeded " + std::to_string(cap) +
                           " applications");
    }
    SpfStep step = spf_step(state, params);
    accumulated += weight * step.known;
    trace.steps.push_back(step);

    if (!step.next) {
      trace.result = accumulated;
      break;
    }
    weight *= RationalFunction(Polynomial::monomial(step.carry, step.t_power));
    state = *step.next;
    if (state == SpfState{0, 0}) {
      // Z = A + B Z
      const RationalFunction solvent = RationalFunction::constant(1) - weight;
      if (solvent.is_zero()) throw InternalError("stationary phase fixed point is degenerate");
      trace.result = accumulated / solvent;
      break;
    }
  }
  trace.applications = trace.steps.size();
  return trace;
}

}  // namespace igusa
