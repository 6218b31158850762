#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace msplit {

// Malformed or inconsistent user-supplied data (bad multiset, split that does
// not fit its ground, out-of-range index, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called on a value that violates its documented contract
// (e.g. building a tree from an inconsistent thin subgraph).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A configured search or enumeration limit would be exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parse failure carrying a 1-based source location.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : InputError("line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace msplit
