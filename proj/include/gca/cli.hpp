// The command-line surface: subcommands mutate, unfold, adjoin, verify and
// trace. Exit codes: 0 success, 1 usage or input error, 2 mathematical
// mismatch.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gca {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitMismatch = 2;

// args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gca
