#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "projpoly/errors.hpp"

namespace projpoly {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Eigendecomposition A = V diag(values) V* of a Hermitian matrix,
// values ascending, V unitary.  Backs expm/logm/invsqrtm.
struct EigenDecompositionHermitian {
  RealVector values;
  ComplexMatrix vectors;
};

// A = U diag(S) V*, U m-by-p with orthonormal columns, S descending, V unitary.
struct ThinSVD {
  ComplexMatrix U;
  RealVector S;
  ComplexMatrix V;
};

// A = QR, Q m-by-p with orthonormal columns, R upper triangular with
// real positive diagonal (which makes the factorization unique).
struct ThinQR {
  ComplexMatrix Q;
  ComplexMatrix R;
};

double frobenius_norm(const ComplexMatrix& A);

// Hermitian part (A + A*)/2.  Throws DimensionError for non-square A.
ComplexMatrix sym_part(const ComplexMatrix& A);

// Skew-Hermitian part (A - A*)/2.
ComplexMatrix skew_part(const ComplexMatrix& A);

// Structure defect helpers: Frobenius norms of the violating component.
double unitarity_defect(const ComplexMatrix& U);   // ||U*U - I||
double hermitian_defect(const ComplexMatrix& A);   // ||A - sym(A)||
double skew_defect(const ComplexMatrix& A);        // ||A - skew(A)||

EigenDecompositionHermitian eig_hermitian(const ComplexMatrix& A);

// e^Omega for skew-Hermitian Omega, computed via the Hermitian
// eigendecomposition of -i*Omega.  The result is unitary up to the
// eigensolver's accuracy.
ComplexMatrix expm_skew(const ComplexMatrix& Omega);

// Principal logarithm of a unitary matrix; the result is skew-Hermitian
// with eigenvalue phases in (-pi, pi).  Throws BranchCutError when an
// eigenvalue lies within angular tolerance 1e-6 of -1.
ComplexMatrix logm_unitary(const ComplexMatrix& U);

// C^{-1/2} for Hermitian positive-definite C.
ComplexMatrix invsqrtm_hpd(const ComplexMatrix& C);

ThinSVD thin_svd(const ComplexMatrix& A);
ThinQR thin_qr(const ComplexMatrix& A);

// Given Y with orthonormal columns, returns Y_perp such that [Y Y_perp]
// is unitary.  For m == p the result has zero columns.
ComplexMatrix orth_completion(const ComplexMatrix& Y);

// Seeded generators.  Deterministic per seed; outputs are normalized to
// unit Frobenius norm so the sweep parameter t alone controls step size.
ComplexMatrix random_skew_hermitian(int m, std::uint64_t seed);
ComplexMatrix random_stiefel_point(int m, int p, std::uint64_t seed);
ComplexMatrix random_grassmann_tangent(const ComplexMatrix& Y, std::uint64_t seed);
ComplexMatrix random_stiefel_tangent(const ComplexMatrix& Y, std::uint64_t seed,
                                     bool grassmann_only = false);

}  // namespace projpoly
