#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hk::cli {

// Exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_singular = 3;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Decimal integers separated by commas or whitespace; lines starting with '#' are skipped.
std::vector<std::string> split_sequence(std::istream& in);

} // namespace hk::cli
