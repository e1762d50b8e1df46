#pragma once

#include <stdexcept>
#include <string>

namespace sparse_rips {

/// Malformed or out-of-range user input (bad files, invalid parameters).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation was refused because it would exceed a configured resource cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sparse_rips
