#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "quadscroll/field.hpp"

namespace quadscroll::cli {

enum ExitCode : int {
  kSuccess = 0,
  kMismatch = 1,      // a verification disagreed
  kUsageError = 2,
  kBuildFailure = 3,  // attempts exhausted or empty singular system
};

enum class OutputFormat { json, csv, human };

struct RunConfig {
  FieldSpec field = FieldSpec::prime(kDefaultPrime);
  std::uint64_t seed = 0;
  std::optional<OutputFormat> output;  // unset: per-command default
  int max_attempts = 20;
  std::optional<std::uint32_t> scan_prime;
};

/// Default prime, overridable through QUADSCROLL_PRIME.
std::uint32_t default_prime();

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadscroll::cli
