#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hecke::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitInternal = 3;

/// Parses `args` (without the program name), runs one subcommand and writes the
/// report to `out`. Diagnostics go to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string tool_version();

}  // namespace hecke::cli
