#pragma once

#include <stdexcept>
#include <string>

namespace rdom {

// Input is larger than the configured exact-search limit.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Graph6Error : public std::runtime_error {
 public:
  explicit Graph6Error(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  // 1-based line number in the source file, 0 when parsing a bare string.
  int line() const { return line_; }

 private:
  int line_;
};

// A search ran past a proven upper bound. Seeing this means either the
// bound or the solver is wrong.
class BoundViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rdom
