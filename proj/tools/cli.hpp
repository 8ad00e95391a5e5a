#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twostar::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verification mismatch or I/O error
inline constexpr int kExitUsage = 2;    // bad flags or missing DB
inline constexpr int kExitCap = 3;
inline constexpr int kExitSeed = 4;

/// Runs one invocation; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twostar::cli
