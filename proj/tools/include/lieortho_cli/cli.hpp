#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lieortho::cli {

// Exit codes: 0 success or verdict true, 1 verdict false, 2 input error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_false = 1;
inline constexpr int exit_input_error = 2;

// Runs one command. args excludes the program name. A file argument "-"
// reads from `in`.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err);

} // namespace lieortho::cli
