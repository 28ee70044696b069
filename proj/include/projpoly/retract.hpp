#pragma once

#include "projpoly/polar.hpp"
#include "projpoly/polynomials.hpp"

namespace projpoly {

enum class Manifold { Unitary, Grassmann, Stiefel };
enum class Projector { Polar, QR };
enum class PolarMethod { SVD, Newton, NewtonRect, NewtonSchulz };

// Tangent data at a base point.  For the unitary group the identity-based
// convention applies: base is empty and direction holds the skew-Hermitian
// Omega; a retraction from a base U is U * retract(Omega), which is valid
// because the polar projector is left-unitarily equivariant.
struct TangentVector {
  Manifold manifold = Manifold::Unitary;
  ComplexMatrix base;       // Y with orthonormal columns (empty for Unitary)
  ComplexMatrix direction;  // H (or Omega for Unitary)
};

TangentVector unitary_tangent(ComplexMatrix omega);
TangentVector grassmann_tangent(ComplexMatrix Y, ComplexMatrix H);
TangentVector stiefel_tangent(ComplexMatrix Y, ComplexMatrix H);

struct RetractionSpec {
  Manifold manifold = Manifold::Unitary;
  int order_n = 1;
  Projector projector = Projector::Polar;
  PolarMethod polar_method = PolarMethod::SVD;
  IterationConfig iteration{};  // used by the iterative polar methods

  void validate() const;
};

// Per-manifold tangent diagnostics; only the norm relevant to tv.manifold
// decides pass/fail, the others are reported as NaN.
struct TangentReport {
  Manifold manifold = Manifold::Unitary;
  double base_defect = 0.0;       // ||Y*Y - I||
  double grassmann_defect = 0.0;  // ||Y*H||
  double stiefel_defect = 0.0;    // ||sym(Y*H)||
  double unitary_defect = 0.0;    // ||Omega - skew(Omega)||
  bool pass = false;
};

TangentReport check_tangent(const TangentVector& tv);

// P(Theta_n(t*Omega)): unitary approximation of e^{t*Omega} with error
// O(t^{2n+1}).
ComplexMatrix retract_unitary(const ComplexMatrix& Omega, double t,
                              const RetractionSpec& spec);

// Exact Grassmann exponential via the thin SVD t*H = U S V*:
// Y V cos(S) V* + U sin(S) V*.
ComplexMatrix exp_grassmann_exact(const TangentVector& tv, double t);

// Projection (polar or QR) of Y alpha_n(t^2 H*H) + t H beta_n(t^2 H*H);
// matches the exact exponential to O(t^{2n+1}).  Cost O(mp^2): only p-by-p
// polynomial values and one m-by-p projection, no m-by-m intermediates.
ComplexMatrix retract_grassmann(const TangentVector& tv, double t,
                                const RetractionSpec& spec);

// Exact Stiefel exponential (canonical metric) via the full m-by-m block
// [Omega -K*; K 0]; costs O(m^3), intended for oracle use at desk scale.
ComplexMatrix exp_stiefel_exact(const TangentVector& tv, double t);

// Polar projection of Y gamma_n(t^2 H*H, t Y*H) + t H delta_n(...), n in
// {1,2,3}.  Error O(t^{n+1}) generically, O(t^{2n+1}) when Y*H = 0 or m = p.
ComplexMatrix retract_stiefel(const TangentVector& tv, double t,
                              const RetractionSpec& spec);

// Geodesic distance on the unitary group: ||log(U*V)|| / sqrt(2).
double dist_unitary(const ComplexMatrix& U, const ComplexMatrix& V);

// Subspace distance min ||XV - YW|| over unitary V, W.  Equal to
// sqrt(2p - 2 sum_i sigma_i(X*Y)); evaluated through the principal-angle
// sines sigma_i(Y - X(X*Y)) to avoid cancellation at small separations.
double dist_grassmann(const ComplexMatrix& X, const ComplexMatrix& Y);

}  // namespace projpoly
