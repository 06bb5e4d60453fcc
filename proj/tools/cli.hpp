#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latgap::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kInvalidInput = 2;
inline constexpr int kResourceLimit = 3;

/// Runs the command line `args` (args[0] is the program name).  One JSON
/// document goes to `out`, diagnostics to `err`.  `in` replaces a missing
/// --input.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace latgap::cli
