#include "projpoly/retract.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>

namespace projpoly {

namespace {

constexpr double kTangentTol = 1e-10;

ComplexMatrix apply_polar(const ComplexMatrix& A, const RetractionSpec& spec) {
  try {
    switch (spec.polar_method) {
      case PolarMethod::SVD:
        return polar_svd(A).U;
      case PolarMethod::Newton:
        if (A.rows() != A.cols())
          throw ConfigError(
              "polar method 'newton' needs a square argument; use "
              "'newton-rect' or 'newton-schulz' for rectangular problems");
        return polar_newton(A, spec.iteration).U;
      case PolarMethod::NewtonRect:
        return polar_newton_rect(A, spec.iteration).U;
      case PolarMethod::NewtonSchulz:
        return polar_newton_schulz(A, spec.iteration).U;
    }
    throw ConfigError("unknown polar method");
  } catch (const RankError&) {
    throw StepTooLargeError(
        "retraction: pre-projection matrix lost rank; take a smaller step t");
  } catch (const SingularityError&) {
    throw StepTooLargeError(
        "retraction: singular polar iterate; take a smaller step t");
  }
}

ComplexMatrix apply_projector(const ComplexMatrix& A, const RetractionSpec& spec) {
  if (spec.projector == Projector::QR) {
    try {
      return qr_projector(A);
    } catch (const RankError&) {
      throw StepTooLargeError(
          "retraction: pre-projection matrix lost rank; take a smaller step t");
    }
  }
  return apply_polar(A, spec);
}

void validate_tangent(const TangentVector& tv, const char* op) {
  if (!check_tangent(tv).pass)
    throw StructureError(std::string(op) + ": tangent-space invariant violated");
}

}  // namespace

TangentVector unitary_tangent(ComplexMatrix omega) {
  return {Manifold::Unitary, ComplexMatrix(), std::move(omega)};
}

TangentVector grassmann_tangent(ComplexMatrix Y, ComplexMatrix H) {
  return {Manifold::Grassmann, std::move(Y), std::move(H)};
}

TangentVector stiefel_tangent(ComplexMatrix Y, ComplexMatrix H) {
  return {Manifold::Stiefel, std::move(Y), std::move(H)};
}

void RetractionSpec::validate() const {
  if (projector == Projector::QR && manifold != Manifold::Grassmann)
    throw ConfigError("the QR projector applies to the Grassmannian only");
  if (manifold == Manifold::Stiefel) {
    if (order_n < 1 || order_n > 3)
      throw ConfigError("Stiefel retractions support order_n in {1,2,3}");
  } else if (order_n < 0 || order_n > kMaxBesselOrder) {
    throw ConfigError("order_n must lie in [0, 12]");
  }
  iteration.validate();
}

TangentReport check_tangent(const TangentVector& tv) {
  const auto nan = std::numeric_limits<double>::quiet_NaN();
  TangentReport report;
  report.manifold = tv.manifold;
  report.base_defect = nan;
  report.grassmann_defect = nan;
  report.stiefel_defect = nan;
  report.unitary_defect = nan;

  if (tv.manifold == Manifold::Unitary) {
    if (tv.direction.rows() != tv.direction.cols()) {
      report.pass = false;
      return report;
    }
    report.unitary_defect = skew_defect(tv.direction);
    report.pass = report.unitary_defect <= kTangentTol;
    return report;
  }

  report.base_defect = unitarity_defect(tv.base);
  const bool base_ok =
      tv.base.rows() >= tv.base.cols() &&
      tv.base.rows() == tv.direction.rows() &&
      tv.base.cols() == tv.direction.cols() &&
      report.base_defect <= kTangentTol * std::max<double>(1.0, tv.base.rows());
  if (!base_ok) {
    report.pass = false;
    return report;
  }

  const ComplexMatrix YH = tv.base.adjoint() * tv.direction;
  if (tv.manifold == Manifold::Grassmann) {
    report.grassmann_defect = YH.norm();
    report.pass = report.grassmann_defect <= kTangentTol;
  } else {
    report.stiefel_defect = sym_part(YH).norm();
    report.pass = report.stiefel_defect <= kTangentTol;
  }
  return report;
}

ComplexMatrix retract_unitary(const ComplexMatrix& Omega, double t,
                              const RetractionSpec& spec) {
  spec.validate();
  if (spec.manifold != Manifold::Unitary)
    throw ConfigError("retract_unitary: spec.manifold must be Unitary");
  if (skew_defect(Omega) > kTangentTol * std::max(1.0, Omega.norm()))
    throw StructureError("retract_unitary: Omega is not skew-Hermitian");
  return apply_projector(theta_apply(spec.order_n, t * Omega), spec);
}

ComplexMatrix exp_grassmann_exact(const TangentVector& tv, double t) {
  if (tv.manifold != Manifold::Grassmann)
    throw StructureError("exp_grassmann_exact: expected a Grassmann tangent");
  validate_tangent(tv, "exp_grassmann_exact");
  const ThinSVD svd = thin_svd(t * tv.direction);
  const Eigen::VectorXcd cosS = svd.S.array().cos().matrix().cast<Complex>();
  const Eigen::VectorXcd sinS = svd.S.array().sin().matrix().cast<Complex>();
  return tv.base * svd.V * cosS.asDiagonal() * svd.V.adjoint() +
         svd.U * sinS.asDiagonal() * svd.V.adjoint();
}

ComplexMatrix retract_grassmann(const TangentVector& tv, double t,
                                const RetractionSpec& spec) {
  spec.validate();
  if (spec.manifold != Manifold::Grassmann || tv.manifold != Manifold::Grassmann)
    throw ConfigError("retract_grassmann: expects Grassmann spec and tangent");
  validate_tangent(tv, "retract_grassmann");
  const AlphaBeta ab = alpha_beta_coeffs(spec.order_n);
  const ComplexMatrix Z = (t * t) * (tv.direction.adjoint() * tv.direction);
  ComplexMatrix A = tv.base * eval_poly(to_double(ab.alpha), Z);
  if (!ab.beta.empty())
    A += t * (tv.direction * eval_poly(to_double(ab.beta), Z));
  return apply_projector(A, spec);
}

ComplexMatrix exp_stiefel_exact(const TangentVector& tv, double t) {
  if (tv.manifold != Manifold::Stiefel)
    throw StructureError("exp_stiefel_exact: expected a Stiefel tangent");
  validate_tangent(tv, "exp_stiefel_exact");
  const auto m = tv.base.rows();
  const auto p = tv.base.cols();
  const ComplexMatrix Yp = orth_completion(tv.base);
  const ComplexMatrix Omega = tv.base.adjoint() * tv.direction;
  const ComplexMatrix K = Yp.adjoint() * tv.direction;

  ComplexMatrix Z(m, m);
  Z.topLeftCorner(p, p) = Omega;
  Z.topRightCorner(p, m - p) = -K.adjoint();
  Z.bottomLeftCorner(m - p, p) = K;
  Z.bottomRightCorner(m - p, m - p).setZero();
  Z = skew_part(Z);  // scrub roundoff asymmetry in Omega

  const ComplexMatrix E = expm_skew(t * Z);
  ComplexMatrix frame(m, m);
  frame.leftCols(p) = tv.base;
  frame.rightCols(m - p) = Yp;
  return frame * E.leftCols(p);
}

ComplexMatrix retract_stiefel(const TangentVector& tv, double t,
                              const RetractionSpec& spec) {
  spec.validate();
  if (spec.manifold != Manifold::Stiefel || tv.manifold != Manifold::Stiefel)
    throw ConfigError("retract_stiefel: expects Stiefel spec and tangent");
  validate_tangent(tv, "retract_stiefel");
  const GammaDelta gd = gamma_delta(spec.order_n);
  const ComplexMatrix X = (t * t) * (tv.direction.adjoint() * tv.direction);
  const ComplexMatrix W = t * (tv.base.adjoint() * tv.direction);
  const ComplexMatrix A = tv.base * eval_noncommutative(gd.gamma, X, W) +
                          t * (tv.direction * eval_noncommutative(gd.delta, X, W));
  return apply_polar(A, spec);
}

double dist_unitary(const ComplexMatrix& U, const ComplexMatrix& V) {
  if (U.rows() != V.rows() || U.cols() != V.cols() || U.rows() != U.cols())
    throw DimensionError("dist_unitary: expects square matrices of equal size");
  const double scale = std::max(1.0, static_cast<double>(U.rows()));
  if (unitarity_defect(U) > 1e-8 * scale || unitarity_defect(V) > 1e-8 * scale)
    throw StructureError("dist_unitary: inputs must be unitary");
  return logm_unitary(U.adjoint() * V).norm() / std::sqrt(2.0);
}

double dist_grassmann(const ComplexMatrix& X, const ComplexMatrix& Y) {
  if (X.rows() != Y.rows() || X.cols() != Y.cols())
    throw DimensionError("dist_grassmann: expects matrices of equal shape");
  const auto p = X.cols();
  const double scale = std::max<double>(1.0, static_cast<double>(p));
  if (unitarity_defect(X) > 1e-8 * scale || unitarity_defect(Y) > 1e-8 * scale)
    throw StructureError("dist_grassmann: columns must be orthonormal");
  // sin(theta_i) are the singular values of (I - XX*)Y = Y - X(X*Y); then
  // 2p - 2*sum cos(theta_i) == sum 2 sin^2/(1 + cos), evaluated without
  // cancellation at small angles.
  const ComplexMatrix B = Y - X * (X.adjoint() * Y);
  Eigen::JacobiSVD<ComplexMatrix> svd(B);
  double dist_sq = 0.0;
  for (Eigen::Index i = 0; i < p; ++i) {
    const double s = std::min(svd.singularValues()(i), 1.0);
    const double c = std::sqrt(std::max(0.0, 1.0 - s * s));
    dist_sq += 2.0 * s * s / (1.0 + c);
  }
  return std::sqrt(dist_sq);
}

}  // namespace projpoly
