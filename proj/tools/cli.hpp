#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bellwave::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line (args[0] is the program name) and returns the
/// process exit code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Reads a flat `key = value` file. Blank lines and lines starting with
/// '#' are ignored.
std::vector<std::pair<std::string, std::string>> read_config(const std::string& path);

/// Inserts config entries as flags right after the subcommand, skipping
/// keys already given on the command line so that flags win.
std::vector<std::string> merge_config(const std::vector<std::string>& args,
                                      const std::vector<std::pair<std::string, std::string>>& entries);

}  // namespace bellwave::cli
