#pragma once

#include <stdexcept>
#include <string>

namespace inv {

// Raised when a search would exceed its configured size guard and the caller
// did not opt in to long runtimes.
struct guard_exceeded : std::runtime_error {
  explicit guard_exceeded(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace inv
