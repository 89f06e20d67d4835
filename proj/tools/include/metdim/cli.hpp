#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace metdim {

/// Exit codes: 0 success, 1 computational failure, 2 usage or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name).
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

}  // namespace metdim
