#pragma once

#include <stdexcept>
#include <string>

namespace qabe {

// Caller violated a documented precondition (bad level, non-coprime
// multiplier, support outside the required subgroup, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an identity that is a theorem fails to hold.  Never a user
// error: it means the implementation is wrong.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qabe
