#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thetafay::cli {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

/// Parses `args` (without the program name), runs the subcommand and writes
/// its JSON report to `out` or to --out. Usage errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thetafay::cli
