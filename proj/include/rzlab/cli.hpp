#pragma once

#include <iosfwd>

namespace rzlab::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
  kSuccess = 0,
  kDomainOrRange = 2,
  kVerificationFailure = 3,
  kUsage = 64,
};

/// Runs the command line. Reports go to `out` (or to --out), messages to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rzlab::cli
