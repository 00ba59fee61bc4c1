#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace illtp::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kNotProvable = 1;  // also: proof rejected by check
inline constexpr int kUnknown = 2;
inline constexpr int kUsage = 64;
inline constexpr int kDataError = 65;
inline constexpr int kNoInput = 66;
inline constexpr int kInternal = 70;
inline constexpr int kCantCreate = 73;

/// Runs the command line `args` (without the program name). Reports and
/// generated text go to `out` unless redirected to files by flags; all
/// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_main(int argc, char** argv);

}  // namespace illtp::cli
