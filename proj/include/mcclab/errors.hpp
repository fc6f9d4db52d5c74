#pragma once

#include <stdexcept>
#include <string>

namespace mcclab {

// Raised when an argument violates an operation's precondition.
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an exhaustive search would exceed its configured work budget.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A structural invariant failed on an input that satisfied the preconditions.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace mcclab
