#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace prosopo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFindings = 1;
inline constexpr int kExitError = 2;

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics only to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prosopo::cli
