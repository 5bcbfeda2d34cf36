#pragma once

#include <stdexcept>
#include <string>

namespace premetric {

/// Raised when an operation's preconditions (degrees, dimensions, variance)
/// are not met by its arguments.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace premetric
