#include "projpoly/polar.hpp"

#include <Eigen/Cholesky>
#include <Eigen/LU>
#include <cmath>

namespace projpoly {

namespace {

void require_tall(const ComplexMatrix& A, const char* op) {
  if (A.rows() < A.cols())
    throw DimensionError(std::string(op) + ": requires m >= p");
}

// Common tail of the three iterations: verify the limit is actually a
// matrix with orthonormal columns (catches rank-deficient inputs, whose
// iterates converge to a partial isometry instead).
PolarIteration finish(ComplexMatrix U, int iterations, double last_step) {
  PolarIteration out{std::move(U), iterations, last_step, 0.0};
  out.residual = unitarity_defect(out.U);
  const double p = static_cast<double>(out.U.cols());
  if (out.residual > 1e-8 * std::max(1.0, p))
    throw NonConvergenceError(
        "polar iteration: limit is not orthonormal (rank-deficient input?)",
        out.residual, iterations);
  return out;
}

}  // namespace

PolarFactors polar_svd(const ComplexMatrix& A) {
  require_tall(A, "polar_svd");
  const ThinSVD svd = thin_svd(A);
  const auto p = A.cols();
  if (p > 0) {
    const double sigma1 = svd.S(0);
    if (!(sigma1 > 0.0) || svd.S(p - 1) <= 1e-12 * sigma1)
      throw RankError("polar_svd: input is numerically rank-deficient");
  }
  const Eigen::VectorXcd s = svd.S.cast<Complex>();
  PolarFactors out;
  out.U = svd.U * svd.V.adjoint();
  out.H = sym_part(svd.V * s.asDiagonal() * svd.V.adjoint());
  return out;
}

PolarIteration polar_newton(const ComplexMatrix& A, const IterationConfig& cfg) {
  if (A.rows() != A.cols())
    throw DimensionError("polar_newton: requires a square matrix");
  cfg.validate();
  ComplexMatrix X = A;
  double step = 0.0;
  for (int k = 1; k <= cfg.max_iters; ++k) {
    Eigen::FullPivLU<ComplexMatrix> lu(X);
    if (!lu.isInvertible())
      throw SingularityError("polar_newton: singular iterate");
    const ComplexMatrix Xnext = 0.5 * (X + lu.inverse().adjoint());
    step = (Xnext - X).norm() / std::max(Xnext.norm(), 1e-300);
    X = Xnext;
    if (step <= cfg.tol)
      return finish(std::move(X), k, step);
  }
  throw NonConvergenceError("polar_newton: max_iters exceeded", step,
                            cfg.max_iters);
}

PolarIteration polar_newton_rect(const ComplexMatrix& A, const IterationConfig& cfg) {
  require_tall(A, "polar_newton_rect");
  cfg.validate();
  const auto p = A.cols();
  ComplexMatrix X = A;
  double step = 0.0;
  for (int k = 1; k <= cfg.max_iters; ++k) {
    // I + X*X is Hermitian with eigenvalues >= 1, so Cholesky always applies.
    const ComplexMatrix C =
        ComplexMatrix::Identity(p, p) + X.adjoint() * X;
    Eigen::LLT<ComplexMatrix> llt(C);
    if (llt.info() != Eigen::Success)
      throw SingularityError("polar_newton_rect: normal-equations solve failed");
    const ComplexMatrix Xnext = 2.0 * llt.solve(X.adjoint()).adjoint();
    step = (Xnext - X).norm() / std::max(Xnext.norm(), 1e-300);
    X = Xnext;
    if (step <= cfg.tol)
      return finish(std::move(X), k, step);
  }
  throw NonConvergenceError("polar_newton_rect: max_iters exceeded", step,
                            cfg.max_iters);
}

PolarIteration polar_newton_schulz(const ComplexMatrix& A, const IterationConfig& cfg) {
  require_tall(A, "polar_newton_schulz");
  cfg.validate();
  const double norm = A.norm();
  if (!(norm > 0.0))
    throw RankError("polar_newton_schulz: zero input");
  const auto p = A.cols();
  ComplexMatrix X = A / norm;  // sigma_1 <= ||A||_F, so all sigma now in (0, 1]
  double step = 0.0;
  for (int k = 1; k <= cfg.max_iters; ++k) {
    const ComplexMatrix Xnext =
        0.5 * X * (3.0 * ComplexMatrix::Identity(p, p) - X.adjoint() * X);
    step = (Xnext - X).norm() / std::max(Xnext.norm(), 1e-300);
    X = Xnext;
    if (step <= cfg.tol)
      return finish(std::move(X), k, step);
  }
  throw NonConvergenceError("polar_newton_schulz: max_iters exceeded", step,
                            cfg.max_iters);
}

ComplexMatrix qr_projector(const ComplexMatrix& A) {
  require_tall(A, "qr_projector");
  return thin_qr(A).Q;
}

GapDiagnostic symmetry_gap(const ComplexMatrix& A, const ComplexMatrix& Utilde) {
  require_tall(A, "symmetry_gap");
  if (A.rows() != Utilde.rows() || A.cols() != Utilde.cols())
    throw DimensionError("symmetry_gap: A and Utilde must have equal shape");
  const auto p = A.cols();
  if (unitarity_defect(Utilde) > 1e-8 * std::max<double>(1.0, static_cast<double>(p)))
    throw DomainError("symmetry_gap: Utilde does not have orthonormal columns");
  if ((A - Utilde).norm() >= 1.0)
    throw DomainError("symmetry_gap: requires ||A - Utilde|| < 1");

  const ComplexMatrix M = Utilde.adjoint() * A;
  const double skew_norm = skew_part(M).norm();
  const double proj_defect = (A - Utilde * M).norm();  // ||(I - U~U~*)A||

  const ThinSVD svd = thin_svd(A);
  const double sigma1 = svd.S(0);
  const double sigmap = svd.S(p - 1);
  if (sigmap <= 1e-12 * sigma1)
    throw DomainError("symmetry_gap: A must have full rank");
  const auto eig = eig_hermitian(sym_part(M));
  const double lambda_p = eig.values(0);

  GapDiagnostic out;
  out.lower = std::max(2.0 * skew_norm, proj_defect) / (2.0 * sigma1);
  out.upper = 2.0 * (skew_norm + proj_defect) / (sigmap + lambda_p);
  out.actual = (svd.U * svd.V.adjoint() - Utilde).norm();
  return out;
}

}  // namespace projpoly
