#pragma once

#include <stdexcept>
#include <string>

namespace chebpol {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Caller passed arguments outside an operation's contract.
struct InvalidArgumentError : Error {
  using Error::Error;
};

/// A set description is degenerate (e.g. a curve with vanishing derivative).
struct InvalidSetError : Error {
  using Error::Error;
};

/// A requested computation exceeds a configured node/evaluation cap.
struct ResourceLimitError : Error {
  using Error::Error;
};

/// A weight violated its declared diagonal lower bound.
struct CpdViolationError : Error {
  using Error::Error;
};

/// No constant is known for the requested (s, d) combination.
struct UnavailableConstantError : Error {
  using Error::Error;
};

}  // namespace chebpol
