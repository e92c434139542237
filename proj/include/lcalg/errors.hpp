#pragma once

#include <stdexcept>
#include <string>

namespace lcalg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not conform (vector length, matrix size, algebra dimension).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on an algebra that violates its precondition
/// (not unital, not quadratic, not locally complex, invalid grading, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exact rational normalization (a square root) does not exist for the
/// elements available to the algorithm.
class NormalizationError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Malformed text input: rationals, element expressions, algebra files.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A result failed its own exact postcondition check. Signals a bug or an
/// inconsistent input that slipped past the precondition checks.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace lcalg
