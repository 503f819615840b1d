#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidrep::cli {

// Exit codes shared by every subcommand.
inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_usage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace braidrep::cli
