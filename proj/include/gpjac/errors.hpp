#pragma once

#include <stdexcept>
#include <string>

namespace gpjac {

// Raised when two routes that must agree do not, or a claimed-exact step leaves
// a remainder. Precondition violations use std::invalid_argument instead.
class InconsistencyError : public std::runtime_error {
 public:
  explicit InconsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gpjac
