#pragma once

#include <stdexcept>
#include <string>

namespace logobf {

// Root of every exception thrown by the library. Module-specific errors
// derive from this so callers can catch at whatever granularity they need.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace logobf
