#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace igusa {

/// Exit codes of the igusa command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitUsage = 2,
  kExitUnsupportedPrime = 3,
  kExitBudget = 4,
};

/// Parses an IGUSA_BUDGET style value; nullopt when it is not a positive integer.
std::optional<std::uint64_t> parse_budget(const std::string& text);

/// Runs the tool with `args` (args[0] is the program name) and returns its exit code.
/// The enumeration budget comes from IGUSA_BUDGET when set.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace igusa
