#pragma once

#include <stdexcept>
#include <string>

namespace rzlab {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain (y <= 0, c outside (a,b), ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Argument outside the supported evaluation window.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Evaluation at a pole (s = 1 for zeta, nonpositive integer for log-gamma, ...).
class PoleError : public Error {
 public:
  using Error::Error;
};

// Caller violated a documented precondition (no sign change, bad grid, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The wave function vanishes identically for y <= 0 (V = infinity there).
class BarrierError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Semi-infinite integrand does not decay; the tail never shrinks.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

// Zero of the winding function found on (or numerically at) the contour.
class BoundaryZeroError : public Error {
 public:
  using Error::Error;
};

// ODE integration could not proceed toward the singular point.
class IntegrationLimitError : public Error {
 public:
  using Error::Error;
};

// Sampled real-line data unusable for dispersion reconstruction.
class GridError : public Error {
 public:
  using Error::Error;
};

// |S(k)| fell below the floor at some node.
class NonvanishingViolation : public Error {
 public:
  using Error::Error;
};

// A numerical verification contract failed.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace rzlab
