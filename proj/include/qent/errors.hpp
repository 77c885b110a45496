#pragma once

#include <stdexcept>
#include <string>

namespace qent {

// Base for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad user input: malformed files, invalid states, out-of-range parameters.
struct InvalidInput : Error {
  using Error::Error;
};

// A numerical routine failed to converge or produced an unusable result.
struct NumericalError : Error {
  using Error::Error;
};

// Filesystem-level failures.
struct IoError : Error {
  using Error::Error;
};

}  // namespace qent
