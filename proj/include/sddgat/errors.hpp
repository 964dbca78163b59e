#pragma once

#include <stdexcept>
#include <string>

namespace sddgat {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Tensor shape / dimensionality mismatch.
struct DimensionError : Error {
  using Error::Error;
};

/// Invalid configuration value or combination of values.
struct ConfigError : Error {
  using Error::Error;
};

/// Non-finite value produced, degenerate numeric input, or divergence.
struct NumericError : Error {
  using Error::Error;
};

/// Malformed input file, missing column, or unwritable output.
struct IoError : Error {
  using Error::Error;
};

/// API misuse: wrong call order, non-scalar backward root, unknown subcommand flag.
struct UsageError : Error {
  using Error::Error;
};

}  // namespace sddgat
