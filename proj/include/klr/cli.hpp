#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace klr::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUsage = 2;

// args excludes the program name. JSON lines go to out, summaries and
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace klr::cli
