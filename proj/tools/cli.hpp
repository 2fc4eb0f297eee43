#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maxbv::cli {

enum ExitCode { kSuccess = 0, kVerificationFailure = 1, kInputError = 2 };

// Runs one command line (without the program name). Output goes to `out`
// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maxbv::cli
