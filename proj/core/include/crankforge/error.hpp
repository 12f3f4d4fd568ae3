#pragma once

#include <stdexcept>
#include <string>

namespace crankforge {

/// Raised when an argument violates an operation's precondition
/// (composite modulus, mismatched truncation, malformed input text, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace crankforge
