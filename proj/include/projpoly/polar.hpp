#pragma once

#include "projpoly/matcore.hpp"

namespace projpoly {

// Polar decomposition A = UH: U has orthonormal columns, H is Hermitian
// positive-definite.  U is the nearest matrix with orthonormal columns to A
// in the Frobenius norm.
struct PolarFactors {
  ComplexMatrix U;
  ComplexMatrix H;
};

// Tolerance / budget policy for the fixed-point loops.
struct IterationConfig {
  double tol = 1e-12;  // relative step tolerance
  int max_iters = 100;

  void validate() const {
    if (!(tol > 0.0))
      throw ConfigError("IterationConfig: tol must be > 0");
    if (max_iters < 1)
      throw ConfigError("IterationConfig: max_iters must be >= 1");
  }
};

// Result of an iterative polar computation.  Convergence is detected on the
// relative step norm; the orthogonality residual ||U*U - I|| is reported
// alongside for diagnostics.
struct PolarIteration {
  ComplexMatrix U;
  int iterations = 0;
  double last_step = 0.0;
  double residual = 0.0;
};

// Lemma-style sandwich around ||P(A) - Utilde||.
struct GapDiagnostic {
  double lower = 0.0;
  double upper = 0.0;
  double actual = 0.0;
};

// Exact polar factor via the thin SVD: U = svd.U svd.V*, H = V diag(S) V*.
PolarFactors polar_svd(const ComplexMatrix& A);

// Newton iteration X <- (X + X^{-*})/2 for square nonsingular A.
PolarIteration polar_newton(const ComplexMatrix& A, const IterationConfig& cfg = {});

// Inversion-based variant X <- 2X(I + X*X)^{-1} for full-rank m >= p.
PolarIteration polar_newton_rect(const ComplexMatrix& A, const IterationConfig& cfg = {});

// Inverse-free Newton-Schulz iteration X <- X(3I - X*X)/2.  The input is
// pre-scaled by 1/||A||_F, which forces every singular value into (0, 1]
// and is mandatory for convergence (the polar factor is scale-invariant).
PolarIteration polar_newton_schulz(const ComplexMatrix& A, const IterationConfig& cfg = {});

// The Q factor of the thin QR decomposition; spans range(A).
ComplexMatrix qr_projector(const ComplexMatrix& A);

// Evaluates the sandwich bounds
//   max{2||skew(U~*A)||, ||(I - U~U~*)A||} / (2 sigma_1(A))
//     <= ||P(A) - U~|| <=
//   2(||skew(U~*A)|| + ||(I - U~U~*)A||) / (sigma_p(A) + lambda_p(sym(U~*A)))
// together with the actual gap.  Requires ||A - Utilde|| < 1.
GapDiagnostic symmetry_gap(const ComplexMatrix& A, const ComplexMatrix& Utilde);

}  // namespace projpoly
