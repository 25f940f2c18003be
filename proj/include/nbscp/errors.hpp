#pragma once

#include <stdexcept>
#include <string>

namespace nbscp {

// Inputs violate a documented precondition (bad file, bad parameter,
// dimension mismatch). The CLI maps this to exit code 2.
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// A computation would exceed a configured size cap (exact enumeration
// feature limit, exhaustive search limit). The CLI maps this to exit code 3.
struct cap_exceeded : std::runtime_error {
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nbscp
