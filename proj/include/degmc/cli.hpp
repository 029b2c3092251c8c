#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace degmc {

inline constexpr const char* kVersion = "0.1.0";

// Runs one subcommand; `args` excludes the program name. Reports go to `out`.
int dispatch(const std::vector<std::string>& args, std::ostream& out);

}  // namespace degmc
