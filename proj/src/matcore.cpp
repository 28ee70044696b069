#include "projpoly/matcore.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <cmath>
#include <numbers>
#include <random>

namespace projpoly {

namespace {

void require_square(const ComplexMatrix& A, const char* op) {
  if (A.rows() != A.cols())
    throw DimensionError(std::string(op) + ": expected a square matrix, got " +
                         std::to_string(A.rows()) + "x" + std::to_string(A.cols()));
}

void require_finite(const ComplexMatrix& A, const char* op) {
  if (!A.allFinite())
    throw DomainError(std::string(op) + ": input contains NaN or Inf entries");
}

double rel_scale(const ComplexMatrix& A) { return std::max(1.0, A.norm()); }

ComplexMatrix complex_gaussian(int rows, int cols, std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix G(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const double re = normal(gen);
      const double im = normal(gen);
      G(i, j) = Complex(re, im);
    }
  return G;
}

}  // namespace

double frobenius_norm(const ComplexMatrix& A) { return A.norm(); }

ComplexMatrix sym_part(const ComplexMatrix& A) {
  require_square(A, "sym_part");
  return (A + A.adjoint()) / 2.0;
}

ComplexMatrix skew_part(const ComplexMatrix& A) {
  require_square(A, "skew_part");
  return (A - A.adjoint()) / 2.0;
}

double unitarity_defect(const ComplexMatrix& U) {
  return (U.adjoint() * U - ComplexMatrix::Identity(U.cols(), U.cols())).norm();
}

double hermitian_defect(const ComplexMatrix& A) { return skew_part(A).norm(); }

double skew_defect(const ComplexMatrix& A) { return sym_part(A).norm(); }

EigenDecompositionHermitian eig_hermitian(const ComplexMatrix& A) {
  require_square(A, "eig_hermitian");
  require_finite(A, "eig_hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(A);
  if (solver.info() != Eigen::Success)
    throw Error("eig_hermitian: eigensolver failed to converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix expm_skew(const ComplexMatrix& Omega) {
  require_square(Omega, "expm_skew");
  require_finite(Omega, "expm_skew");
  if (skew_defect(Omega) > 1e-10 * rel_scale(Omega))
    throw StructureError("expm_skew: input is not skew-Hermitian");
  // Omega = i*Herm with Herm = -i*Omega, so e^Omega = V diag(e^{i*lam}) V*.
  const auto eig = eig_hermitian(Complex(0.0, -1.0) * Omega);
  const int m = static_cast<int>(Omega.rows());
  Eigen::VectorXcd phases(m);
  for (int j = 0; j < m; ++j)
    phases(j) = std::polar(1.0, eig.values(j));
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

ComplexMatrix logm_unitary(const ComplexMatrix& U) {
  require_square(U, "logm_unitary");
  require_finite(U, "logm_unitary");
  const int m = static_cast<int>(U.rows());
  if (unitarity_defect(U) > 1e-8 * std::max(1.0, static_cast<double>(m)))
    throw StructureError("logm_unitary: input is not unitary");
  // A unitary matrix is normal, so its complex Schur form is diagonal up
  // to roundoff; the diagonal carries the unit-circle eigenvalues.
  Eigen::ComplexSchur<ComplexMatrix> schur(U, /*computeU=*/true);
  if (schur.info() != Eigen::Success)
    throw Error("logm_unitary: Schur decomposition failed");
  Eigen::VectorXcd logs(m);
  for (int j = 0; j < m; ++j) {
    const double theta = std::arg(schur.matrixT()(j, j));
    if (std::numbers::pi - std::abs(theta) < 1e-6)
      throw BranchCutError(
          "logm_unitary: eigenvalue within 1e-6 of -1 (antipodal input)");
    logs(j) = Complex(0.0, theta);
  }
  const ComplexMatrix L =
      schur.matrixU() * logs.asDiagonal() * schur.matrixU().adjoint();
  return skew_part(L);
}

ComplexMatrix invsqrtm_hpd(const ComplexMatrix& C) {
  require_square(C, "invsqrtm_hpd");
  require_finite(C, "invsqrtm_hpd");
  if (hermitian_defect(C) > 1e-10 * rel_scale(C))
    throw DefinitenessError("invsqrtm_hpd: input is not Hermitian");
  const auto eig = eig_hermitian(sym_part(C));
  const int m = static_cast<int>(C.rows());
  const double lam_max = eig.values(m - 1);
  if (!(lam_max > 0.0) || eig.values(0) <= 1e-12 * lam_max)
    throw DefinitenessError("invsqrtm_hpd: input is not positive-definite");
  const Eigen::VectorXcd inv_sqrt =
      eig.values.array().rsqrt().matrix().cast<Complex>();
  const ComplexMatrix R =
      eig.vectors * inv_sqrt.asDiagonal() * eig.vectors.adjoint();
  return sym_part(R);
}

ThinSVD thin_svd(const ComplexMatrix& A) {
  if (A.rows() < A.cols())
    throw DimensionError("thin_svd: requires m >= p");
  require_finite(A, "thin_svd");
  Eigen::JacobiSVD<ComplexMatrix> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

ThinQR thin_qr(const ComplexMatrix& A) {
  const auto m = A.rows();
  const auto p = A.cols();
  if (m < p)
    throw DimensionError("thin_qr: requires m >= p");
  require_finite(A, "thin_qr");
  Eigen::HouseholderQR<ComplexMatrix> qr(A);
  ComplexMatrix Q = qr.householderQ() * ComplexMatrix::Identity(m, p);
  ComplexMatrix R = qr.matrixQR().topRows(p).triangularView<Eigen::Upper>();

  double diag_max = 0.0;
  for (Eigen::Index j = 0; j < p; ++j)
    diag_max = std::max(diag_max, std::abs(R(j, j)));
  // Fix the gauge: scale so diag(R) is real positive, which pins Q uniquely.
  for (Eigen::Index j = 0; j < p; ++j) {
    const Complex d = R(j, j);
    if (std::abs(d) <= 1e-12 * diag_max)
      throw RankError("thin_qr: input is numerically rank-deficient");
    const Complex phase = d / std::abs(d);
    Q.col(j) *= phase;
    R.row(j) *= std::conj(phase);
    R(j, j) = Complex(std::abs(d), 0.0);
  }
  return {std::move(Q), std::move(R)};
}

ComplexMatrix orth_completion(const ComplexMatrix& Y) {
  const auto m = Y.rows();
  const auto p = Y.cols();
  if (m < p)
    throw DimensionError("orth_completion: requires m >= p");
  if (unitarity_defect(Y) > 1e-10 * std::max(1.0, static_cast<double>(m)))
    throw StructureError("orth_completion: columns are not orthonormal");
  if (m == p)
    return ComplexMatrix(m, 0);
  Eigen::HouseholderQR<ComplexMatrix> qr(Y);
  const ComplexMatrix Qfull = qr.householderQ() * ComplexMatrix::Identity(m, m);
  return Qfull.rightCols(m - p);
}

ComplexMatrix random_skew_hermitian(int m, std::uint64_t seed) {
  if (m < 1)
    throw DimensionError("random_skew_hermitian: m must be >= 1");
  std::mt19937_64 gen(seed);
  ComplexMatrix Omega = skew_part(complex_gaussian(m, m, gen));
  const double norm = Omega.norm();
  if (norm > 0.0)
    Omega /= norm;
  return Omega;
}

ComplexMatrix random_stiefel_point(int m, int p, std::uint64_t seed) {
  if (p < 1 || m < p)
    throw DimensionError("random_stiefel_point: requires m >= p >= 1");
  std::mt19937_64 gen(seed);
  return thin_qr(complex_gaussian(m, p, gen)).Q;
}

ComplexMatrix random_grassmann_tangent(const ComplexMatrix& Y, std::uint64_t seed) {
  const auto m = Y.rows();
  const auto p = Y.cols();
  if (m == p)
    throw DomainError(
        "random_grassmann_tangent: degenerate, the tangent space at m == p "
        "is trivial (K has zero columns)");
  const ComplexMatrix Yp = orth_completion(Y);
  std::mt19937_64 gen(seed);
  ComplexMatrix H = Yp * complex_gaussian(static_cast<int>(m - p),
                                          static_cast<int>(p), gen);
  H /= H.norm();
  return H;
}

ComplexMatrix random_stiefel_tangent(const ComplexMatrix& Y, std::uint64_t seed,
                                     bool grassmann_only) {
  const auto m = Y.rows();
  const auto p = Y.cols();
  const ComplexMatrix Yp = orth_completion(Y);
  std::mt19937_64 gen(seed);
  // Draw order is fixed (Omega first, then K) so the same seed yields the
  // same K component in both tangent modes.
  ComplexMatrix Omega =
      skew_part(complex_gaussian(static_cast<int>(p), static_cast<int>(p), gen));
  if (grassmann_only)
    Omega.setZero();
  ComplexMatrix H = Y * Omega;
  if (m > p)
    H += Yp * complex_gaussian(static_cast<int>(m - p), static_cast<int>(p), gen);
  const double norm = H.norm();
  if (norm == 0.0)
    throw DomainError(
        "random_stiefel_tangent: zero tangent (m == p with grassmann_only "
        "leaves nothing to draw)");
  H /= norm;
  return H;
}

}  // namespace projpoly
