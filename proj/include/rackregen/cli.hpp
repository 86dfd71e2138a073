#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rackregen {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitMismatch = 3;
inline constexpr int kExitUsage = 64;

// Runs the command line tool on `args` (program name excluded).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rackregen
