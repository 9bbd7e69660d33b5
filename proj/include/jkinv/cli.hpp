#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jkinv {

// Exit codes of the command-line tool.
enum Exit : int {
  exit_ok = 0,
  exit_failure = 1,  // sampling could not settle, or an internal check failed
  exit_input = 2,
  exit_mismatch = 3,
  exit_precondition = 4,
  exit_invalid_algebra = 5,
  exit_unknown = 6,
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jkinv
