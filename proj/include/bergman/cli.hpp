#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bergman/run_config.hpp"

namespace bergman::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInternalError = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kHypothesisFailed = 3;

/// Runs one command. args[0] is the program name. The report goes to `out`
/// in one write once the command has finished; diagnostics go to `err` as a
/// single JSON line {"error": kind, "reason": text}.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             const EnvLookup& env = process_environment());

} // namespace bergman::cli
