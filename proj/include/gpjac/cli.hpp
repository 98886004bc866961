#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gpjac {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInconsistent = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line (arguments without the program name). Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gpjac
