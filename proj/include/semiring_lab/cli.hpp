#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace semiring_lab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line; args excludes the program name. JSON goes to out,
/// usage messages to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semiring_lab
