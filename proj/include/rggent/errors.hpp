#pragma once

#include <stdexcept>
#include <string>

namespace rggent {

// Thrown when an operation has no valid formula/reduction for the
// requested parameter range (callers may fall back to Monte Carlo).
class unsupported_range_error : public std::invalid_argument {
 public:
  explicit unsupported_range_error(const std::string& what)
      : std::invalid_argument(what) {}
};

// Thrown when an input exceeds a hard capacity limit (e.g. the
// brute-force canonicalization vertex cap).
class capacity_error : public std::invalid_argument {
 public:
  explicit capacity_error(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace rggent
