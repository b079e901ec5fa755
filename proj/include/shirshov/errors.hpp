#pragma once

#include <stdexcept>
#include <string>

namespace shirshov {

// Violated precondition or malformed input.  Maps to CLI exit code 1.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation was refused because it exceeds its search budget.
// Maps to CLI exit code 3.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace shirshov
