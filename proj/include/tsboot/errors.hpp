#pragma once

#include <stdexcept>

namespace tsboot {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid argument values or malformed inputs.
struct InputError : Error {
  using Error::Error;
};

/// Mismatched dimensions between series, chunk matrices, or models.
struct DimensionError : InputError {
  using InputError::InputError;
};

/// A process specification violating its constraints (non-stochastic
/// transition matrix, explosive recursion asserted stationary, ...).
struct SpecError : Error {
  using Error::Error;
};

/// Singular or ill-conditioned design: the fit cannot proceed.
struct DegenerateDesignError : Error {
  using Error::Error;
};

/// File system and file format problems.
struct IoError : Error {
  using Error::Error;
};

}  // namespace tsboot
