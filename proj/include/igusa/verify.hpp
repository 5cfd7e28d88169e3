#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "igusa/counting.hpp"

namespace igusa {

struct VerifyOptions {
  std::uint32_t n_max = 4;
  std::uint32_t m_max = 4;
  std::vector<std::uint64_t> primes{2, 3, 5};
  std::uint32_t terms = 4;
  std::uint64_t budget = kDefaultBudget;
  /// Source of |N(0)| fed to the closed form; n0_theorem unless a test swaps it.
  std::function<std::uint64_t(const ZetaParams&)> n0_source = n0_theorem;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct InstanceReport {
  ZetaParams params;
  bool supported = true;
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* first_failure() const;
};

struct VerifyReport {
  std::vector<InstanceReport> instances;

  bool passed() const;
  const InstanceReport* first_failure() const;
};

/// Cross-checks closed form, stationary phase, counting oracles, Poincaré bridge and
/// (for {n, m} = {2, 3}) the resolution fixture on every (n, m, p) in the grid.
/// Instances are ordered by (n, m, p).
VerifyReport run_verification(const VerifyOptions& options);

void print_report(const VerifyReport& report, std::ostream& out);

}  // namespace igusa
