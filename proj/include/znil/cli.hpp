#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace znil::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitMismatch = 3;
inline constexpr int kExitResource = 4;

// Executes one subcommand; args excludes the program name. Deterministic
// output for fixed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace znil::cli
