#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace henson::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kPropertyFails = 1;
inline constexpr int kUsageError = 2;

// Runs one command; `args` excludes the program name. `in` backs "-"
// file arguments.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace henson::cli
