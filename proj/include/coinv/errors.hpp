#pragma once

#include <stdexcept>
#include <string>

namespace coinv {

// Bad user input: malformed compositions, mismatched totals, n above the limit.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an exact division leaves a remainder. Every division performed
// by this library is a theorem, so this always signals a bug.
class NotDivisible : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NotInvariant : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NotAntiInvariant : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A graded quotient failed to vanish where the theory says it must.
class NonTerminating : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A free-module decomposition had no solution (input not invariant).
class NoSolution : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An operator would move weight outside the tracked index window.
class WindowOverflow : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace coinv
