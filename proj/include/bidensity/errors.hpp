#pragma once

#include <stdexcept>
#include <string>

namespace bidensity {

/// Input could not be parsed; line/column are 1-based (column 0 = whole line).
class parse_error : public std::runtime_error {
 public:
  parse_error(std::string message, int line, int column = 0)
      : std::runtime_error(std::move(message)), line_(line), column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// A documented precondition of an operation was violated by the caller.
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact search refused: instance exceeds the configured cap or wall-clock guard.
class cap_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Construction refused: instance exceeds the configured memory budget.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation is undefined on this input (e.g. certifying an edgeless graph).
class degenerate_input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bidensity
