#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace unicomm::cli {

/// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;  // report written with an "error" field
inline constexpr int kExitIo = 2;      // unreadable input, malformed JSON, bad flags

/// Parses `args` (without the program name), runs one subcommand and writes
/// its JSON report to --output or to `out`. Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unicomm::cli
