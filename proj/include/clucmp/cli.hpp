#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clucmp {

inline constexpr int exit_ok = 0;
inline constexpr int exit_internal = 1;
inline constexpr int exit_usage = 2;

/// Entry point of the clucmp tool; args excludes the program name.
/// Seeds default to $CLUCMP_SEED when --seed is not given.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clucmp
