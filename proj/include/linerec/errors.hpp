#pragma once

#include <stdexcept>
#include <string>

namespace linerec {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite input, bad sizes, orientation violations and similar misuse.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A dense linear system is singular or the pivot ratio fell below threshold.
class SingularSystemError : public Error {
 public:
  using Error::Error;
};

/// Polynomial roots (or node positions) are too close to separate.
class ClusteredRootsError : public Error {
 public:
  using Error::Error;
};

/// An iterative method hit its cap without meeting its residual target.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Kernel inversion of zero/non-finite values, or a point outside the
/// invertibility strip where inversion is required.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Field evaluation requested at (or too close to) a conductor position.
class EvaluationAtConductorError : public Error {
 public:
  using Error::Error;
};

/// A contour segment with coincident endpoints.
class DegenerateSegmentError : public Error {
 public:
  using Error::Error;
};

/// Scenario/CSV file problems.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace linerec
