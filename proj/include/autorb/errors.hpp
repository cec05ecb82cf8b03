#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace autorb {

// A computation would exceed one of the configured size caps.
class size_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input (bad builtin name, bad permutation, ...).
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Syntax or well-formedness error in presentation text.
class parse_error : public input_error {
 public:
  parse_error(std::string const& msg, std::size_t line, std::size_t column)
      : input_error("line " + std::to_string(line) + ", column "
                    + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// The multiplication table does not satisfy the group axioms. Raised for
// inconsistent presentations as well.
class group_axiom_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace autorb
