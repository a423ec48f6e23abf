#pragma once

#include <stdexcept>
#include <string>

namespace mcts {

// Malformed textual input. `line()` is 1-based, or 0 when the problem is not
// tied to a particular line (e.g. a missing header).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace mcts
