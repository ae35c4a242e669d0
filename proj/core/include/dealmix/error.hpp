#pragma once

#include <stdexcept>
#include <string>

namespace dealmix {

// Malformed or mutually inconsistent input (composition, deck, method, profile).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// A brute-force routine was asked to run above its configured size cap.
class ScaleExceeded : public std::runtime_error {
 public:
  explicit ScaleExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dealmix
