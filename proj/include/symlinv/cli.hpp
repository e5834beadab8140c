#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symlinv::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 2;
inline constexpr int kSingular = 3;

/// Runs one subcommand. `args` excludes the program name. Results go to
/// `out`; failures write a one-line {"error": {...}} object to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symlinv::cli
