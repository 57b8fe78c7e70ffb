#pragma once

#include <stdexcept>

namespace hejc {

/// Base for all library failures that are not plain argument errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Eigensolver or propagator failure.
class SolverError : public Error {
 public:
  using Error::Error;
};

/// Population reached the guard band at the top of the Fock truncation.
class TruncationOverflow : public SolverError {
 public:
  using SolverError::SolverError;
};

/// Time step could not be refined to the requested tolerance.
class StepSizeError : public SolverError {
 public:
  using SolverError::SolverError;
};

}  // namespace hejc
