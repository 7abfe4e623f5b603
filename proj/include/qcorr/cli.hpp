#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcorr::cli {

/// Exit status contract shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

/// Runs the `qcorr` command line (args exclude the program name) and returns
/// the exit status. All normal output goes to `out`, diagnostics to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qcorr::cli
