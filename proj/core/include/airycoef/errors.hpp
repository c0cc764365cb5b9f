#pragma once

#include <stdexcept>
#include <string>

namespace airycoef {

/// Base class for all mathematical domain failures raised by the library.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZeroError : public MathError {
 public:
  using MathError::MathError;
};

/// A rational function was evaluated (or substituted) at one of its poles.
class PoleError : public MathError {
 public:
  using MathError::MathError;
};

/// Truncated-series precondition failure: valuation, constant term or depth.
class SeriesError : public MathError {
 public:
  using MathError::MathError;
};

/// Not enough truncation depth to advance a recursion.
class TruncationError : public MathError {
 public:
  using MathError::MathError;
};

/// An iterative numeric procedure did not reach the requested accuracy.
class ConvergenceError : public MathError {
 public:
  using MathError::MathError;
};

/// Malformed textual expression.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace airycoef
