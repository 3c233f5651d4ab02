#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace etorus::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kInvalidConfig = 2,
  kIoError = 3,
  kGridMismatch = 4,
  kMalformedRows = 5,
};

/// Runs one command line (without the program name). Regular output goes to
/// `out`, diagnostics and summaries for stdout-bound files go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace etorus::cli
