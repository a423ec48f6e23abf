#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mcts::cli {

enum ExitCode {
  kOk = 0,       // success, or the checked object is valid
  kNo = 1,       // well-formed input, negative answer
  kBadInput = 2, // usage errors, unreadable or malformed files
};

// Runs one command line (without the program name). Results go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcts::cli
