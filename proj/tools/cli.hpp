#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abcov::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,                  ///< success, or verification inconclusive
    kInputError = 1,          ///< unreadable/unparsable file, invalid presentation, bad flags
    kVerificationFailed = 2,  ///< a numerical check ran and failed
    kResourceCap = 3,         ///< subgroup enumeration cap or arithmetic range exceeded
    kInternalError = 4,       ///< two independent computations disagreed (a bug)
};

/// Runs one command line (without the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abcov::cli
