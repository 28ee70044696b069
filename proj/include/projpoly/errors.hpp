#pragma once

#include <stdexcept>
#include <string>

namespace projpoly {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape mismatch (non-square input, m < p, incompatible products).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Structural precondition violated (not skew-Hermitian, not unitary,
// columns not orthonormal, tangent-space membership).
class StructureError : public Error {
 public:
  using Error::Error;
};

// Numerically rank-deficient input to a factorization that requires full rank.
class RankError : public Error {
 public:
  using Error::Error;
};

// Input expected to be Hermitian positive-definite is not.
class DefinitenessError : public Error {
 public:
  using Error::Error;
};

// Matrix logarithm hit (or came too close to) the branch cut at -1.
class BranchCutError : public Error {
 public:
  using Error::Error;
};

// Singular iterate or singular combination where an inverse was needed.
class SingularityError : public Error {
 public:
  using Error::Error;
};

// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Retraction rejected its input; the pre-projection matrix lost rank.
// Resolve by taking a smaller step t.
class StepTooLargeError : public Error {
 public:
  using Error::Error;
};

// Invalid experiment/CLI configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// File output failure, message carries the path.
class IoError : public Error {
 public:
  using Error::Error;
};

// Fixed-point loop exhausted max_iters; carries the last residual.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& msg, double residual, int iterations)
      : Error(msg), residual_(residual), iterations_(iterations) {}

  double residual() const { return residual_; }
  int iterations() const { return iterations_; }

 private:
  double residual_;
  int iterations_;
};

}  // namespace projpoly
