#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace numerosity::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kError = 1;
inline constexpr int kUndecided = 2;

// Runs the `numerosity` command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace numerosity::cli
