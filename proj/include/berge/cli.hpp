#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace berge {

// Process exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitInvalidInput = 1,
    kExitUnsolvable = 2,
    kExitVerificationFailed = 3,
};

/// Runs one command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace berge
