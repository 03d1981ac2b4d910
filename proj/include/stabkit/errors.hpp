#pragma once

#include <stdexcept>
#include <string>

namespace stabkit {

/// Bad user input: non-prime d, k > n, malformed ranges.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands live in different ambient spaces (different d or n).
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A resource guard refused to start an enumeration or realization that
/// would exceed its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stabkit
