#pragma once

#include <stdexcept>

namespace afc {

/// Broken contract: bad arguments, violated type invariants, invalid config.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A grid is too coarse for the requested operation.
class ResolutionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Runtime numerical failure (non-convergence, failed step-size check).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace afc
