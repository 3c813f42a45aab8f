#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lsd {

inline constexpr const char* kVersion = "lsd 1.0.0";

// Runs one subcommand; `args` excludes the program name.
// Exit codes: 0 success, 2 usage or invalid input, 3 resource/precision bound, 1 internal failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lsd
