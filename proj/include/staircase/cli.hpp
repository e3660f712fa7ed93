#pragma once

#include "staircase/oracle.hpp"
#include "staircase/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace staircase {

/// Settings shared by every subcommand; echoed in each report header.
struct CliConfig {
  unsigned precision = kDefaultPrecision;
  std::size_t order = 120;
  std::string tolerance = "1e-20";
  std::uint64_t budget = kDefaultOracleBudget;
  std::string format = "text";
  bool timestamp = true;
};

struct CommandResult {
  int status = 0;
  std::string out;
  std::string err;
};

/// Exit statuses: 0 success, 1 a check or comparison failed, 2 usage or input error.
inline constexpr int kExitFailedCheck = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand (count, table, gf, recurrence, verify, bfile). `args`
/// excludes the program name. STAIRCASE_PRECISION sets the default precision.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace staircase
