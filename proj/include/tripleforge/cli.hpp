#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tripleforge/oracle.hpp"

namespace tripleforge::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInternalError = 1,
  kUsageError = 2,
  kPathDisagreement = 3,
  kDiscrepancy = 4,
};

enum class Format { Table, Json, Csv };

// Parses "A..B" (inclusive). Returns nullopt on malformed text, A = 0 or B < A.
std::optional<LegRange> parse_range(const std::string& text);

// Reads TRIPLEFORGE_SWEEP_LIMIT; throws std::invalid_argument when it is set
// but not a positive integer.
std::uint64_t sweep_limit_from_env();

// Runs the command line and returns the process exit code. Records go to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tripleforge::cli
