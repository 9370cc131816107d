#pragma once

#include <stdexcept>
#include <string>

namespace gbt {

/// Violated precondition or invalid input. Maps to CLI exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size limit was exceeded. Maps to CLI exit code 2.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gbt
