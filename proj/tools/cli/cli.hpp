#pragma once

#include <ostream>

namespace cyclocond::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kBadArguments = 2,
    kNumericFailure = 3,
    kIoFailure = 4,
};

/// Parses argv and runs one subcommand. JSON and CSV go to `out`,
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cyclocond::cli
