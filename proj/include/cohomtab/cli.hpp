#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cohomtab::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;
inline constexpr int kOutOfWindow = 3;
inline constexpr int kNonAdmissible = 4;

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cohomtab::cli
