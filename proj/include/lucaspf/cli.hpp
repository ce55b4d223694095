#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lucaspf {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // a cascade stage was not decisive
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUndecidable = 3;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lucaspf
