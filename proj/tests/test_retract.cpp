#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "projpoly/retract.hpp"

using namespace projpoly;
using namespace projpoly::testing;

namespace {

RetractionSpec make_spec(Manifold manifold, int n,
                         Projector projector = Projector::Polar,
                         PolarMethod method = PolarMethod::SVD) {
  RetractionSpec spec;
  spec.manifold = manifold;
  spec.order_n = n;
  spec.projector = projector;
  spec.polar_method = method;
  return spec;
}

double observed_slope(double e_coarse, double e_fine) {
  return std::log2(e_coarse / e_fine);
}

}  // namespace

TEST_CASE("retraction spec validation") {
  CHECK_THROWS_AS(make_spec(Manifold::Unitary, 1, Projector::QR).validate(),
                  ConfigError);
  CHECK_THROWS_AS(make_spec(Manifold::Stiefel, 4).validate(), ConfigError);
  CHECK_THROWS_AS(make_spec(Manifold::Grassmann, 13).validate(), ConfigError);
  CHECK_NOTHROW(make_spec(Manifold::Grassmann, 0, Projector::QR).validate());
}

TEST_CASE("retract_unitary basics") {
  const ComplexMatrix Om = 8.0 * random_skew_hermitian(10, 1);
  const RetractionSpec spec = make_spec(Manifold::Unitary, 2);
  CHECK((retract_unitary(Om, 0.0, spec) - ComplexMatrix::Identity(10, 10)).norm() <=
        1e-13);
  // Theta_0 = 1 projects to the identity for any t.
  CHECK((retract_unitary(Om, 0.7, make_spec(Manifold::Unitary, 0)) -
         ComplexMatrix::Identity(10, 10)).norm() <= 1e-13);

  CHECK_THROWS_AS(retract_unitary(complex_gaussian(5, 5, 2), 0.1, spec),
                  StructureError);
}

TEST_CASE("retract_unitary convergence order 2n+1") {
  const ComplexMatrix Om = 12.0 * random_skew_hermitian(16, 3);
  for (int n : {1, 2, 3}) {
    const RetractionSpec spec = make_spec(Manifold::Unitary, n);
    double prev = -1.0;
    double slope_sum = 0.0;
    int slopes = 0;
    for (int k = 0; k < 4; ++k) {
      const double t = 0.05 * std::pow(2.0, -k);
      const double err = (retract_unitary(Om, t, spec) - expm_skew(t * Om)).norm();
      if (prev > 0.0 && err > 1e-12) {
        slope_sum += observed_slope(prev, err);
        ++slopes;
      }
      prev = err;
    }
    REQUIRE(slopes >= 2);
    CHECK(slope_sum / slopes == doctest::Approx(2.0 * n + 1).epsilon(0.15));
  }
}

TEST_CASE("retract_unitary agrees across polar methods") {
  const ComplexMatrix Om = 6.0 * random_skew_hermitian(9, 4);
  const double t = 0.05;
  const ComplexMatrix ref =
      retract_unitary(Om, t, make_spec(Manifold::Unitary, 2));
  for (PolarMethod method : {PolarMethod::Newton, PolarMethod::NewtonRect,
                             PolarMethod::NewtonSchulz}) {
    const ComplexMatrix alt =
        retract_unitary(Om, t, make_spec(Manifold::Unitary, 2, Projector::Polar, method));
    CHECK((alt - ref).norm() <= 1e-9);
  }
}

TEST_CASE("Pade identity P(Theta_n(tOm))^2 = Theta_n(tOm) Theta_n(-tOm)^{-1}") {
  for (int n : {1, 2, 3, 4}) {
    const ComplexMatrix Om = 5.0 * random_skew_hermitian(12, 40 + n);
    const double t = 0.08;
    const ComplexMatrix Th = theta_apply(n, t * Om);
    const ComplexMatrix Thm = theta_apply(n, -t * Om);
    const ComplexMatrix P = polar_svd(Th).U;
    CHECK((P * P - Th * Thm.inverse()).norm() <= 1e-9);
  }
}

TEST_CASE("block-column identity and the closed form of Theta_n(tZ)(I;0)") {
  for (int n : {1, 2, 3, 4}) {
    const int m = 24, p = 7;
    const ComplexMatrix K = complex_gaussian(m - p, p, 50 + n) / 4.0;
    ComplexMatrix Z = ComplexMatrix::Zero(m, m);
    Z.topRightCorner(p, m - p) = -K.adjoint();
    Z.bottomLeftCorner(m - p, p) = K;
    const double t = 0.3;

    const ComplexMatrix Th = theta_apply(n, t * Z);
    const ComplexMatrix lhs = polar_svd(Th).U.leftCols(p);
    const ComplexMatrix rhs = polar_svd(Th.leftCols(p)).U;
    CHECK((lhs - rhs).norm() <= 1e-9);

    // Theta_n(tZ)(I;0) = (alpha_n(t^2 K*K); tK beta_n(t^2 K*K))
    const AlphaBeta ab = alpha_beta_coeffs(n);
    const ComplexMatrix KtK = (t * t) * (K.adjoint() * K);
    ComplexMatrix closed = ComplexMatrix::Zero(m, p);
    closed.topRows(p) = eval_poly(to_double(ab.alpha), KtK);
    if (!ab.beta.empty())
      closed.bottomRows(m - p) = t * K * eval_poly(to_double(ab.beta), KtK);
    CHECK((Th.leftCols(p) - closed).norm() <= 1e-11);
  }
}

TEST_CASE("exp_grassmann_exact closed forms") {
  const ComplexMatrix Y = random_stiefel_point(12, 4, 60);
  const TangentVector tv = grassmann_tangent(Y, random_grassmann_tangent(Y, 61));
  CHECK((exp_grassmann_exact(tv, 0.0) - Y).norm() <= 1e-12);

  // m=2, p=1 great circle
  ComplexMatrix e1(2, 1), e2(2, 1);
  e1 << 1.0, 0.0;
  e2 << 0.0, 1.0;
  const double theta = 0.37;
  const ComplexMatrix geo = exp_grassmann_exact(grassmann_tangent(e1, e2), theta);
  CHECK(std::abs(geo(0, 0) - Complex(std::cos(theta), 0.0)) <= 1e-14);
  CHECK(std::abs(geo(1, 0) - Complex(std::sin(theta), 0.0)) <= 1e-14);

  CHECK_THROWS_AS(exp_grassmann_exact(grassmann_tangent(Y, Y), 0.1), StructureError);
}

TEST_CASE("exp_grassmann_exact matches the block-exponential oracle") {
  const int m = 14, p = 5;
  const ComplexMatrix Y = random_stiefel_point(m, p, 62);
  const ComplexMatrix H = random_grassmann_tangent(Y, 63);
  const TangentVector tv = grassmann_tangent(Y, H);

  const ComplexMatrix Yp = orth_completion(Y);
  const ComplexMatrix K = Yp.adjoint() * H;
  for (double t : {0.2, 0.9}) {
    ComplexMatrix Z = ComplexMatrix::Zero(m, m);
    Z.topRightCorner(p, m - p) = -K.adjoint();
    Z.bottomLeftCorner(m - p, p) = K;
    ComplexMatrix frame(m, m);
    frame.leftCols(p) = Y;
    frame.rightCols(m - p) = Yp;
    const ComplexMatrix oracle = frame * expm_skew(t * Z).leftCols(p);
    CHECK((exp_grassmann_exact(tv, t) - oracle).norm() <= 1e-9);
  }
}

TEST_CASE("retract_grassmann order-1 equals the classical polar retraction") {
  const ComplexMatrix Y = random_stiefel_point(20, 6, 64);
  const TangentVector tv = grassmann_tangent(Y, random_grassmann_tangent(Y, 65));
  const double t = 0.3;
  const ComplexMatrix R = retract_grassmann(tv, t, make_spec(Manifold::Grassmann, 1));
  CHECK((R - polar_svd(Y + t * tv.direction).U).norm() <= 1e-12);
  CHECK((retract_grassmann(tv, 0.0, make_spec(Manifold::Grassmann, 2)) - Y).norm() <=
        1e-12);
}

TEST_CASE("retract_grassmann convergence orders, both projectors") {
  const ComplexMatrix Y = random_stiefel_point(40, 8, 66);
  const TangentVector tv = grassmann_tangent(Y, random_grassmann_tangent(Y, 67));
  for (int n : {1, 2}) {
    for (Projector proj : {Projector::Polar, Projector::QR}) {
      const RetractionSpec spec = make_spec(Manifold::Grassmann, n, proj);
      double prev = -1.0, slope_sum = 0.0;
      int slopes = 0;
      for (int k = 0; k < 4; ++k) {
        const double t = 1.0 * std::pow(2.0, -k);
        const ComplexMatrix R = retract_grassmann(tv, t, spec);
        const ComplexMatrix E = exp_grassmann_exact(tv, t);
        const double err =
            proj == Projector::QR ? dist_grassmann(R, E) : (R - E).norm();
        if (prev > 0.0 && err > 1e-12) {
          slope_sum += observed_slope(prev, err);
          ++slopes;
        }
        prev = err;
      }
      REQUIRE(slopes >= 2);
      CHECK(slope_sum / slopes == doctest::Approx(2.0 * n + 1).epsilon(0.15));
    }
  }
}

TEST_CASE("exp_stiefel_exact special cases") {
  const int m = 12, p = 4;
  const ComplexMatrix Y = random_stiefel_point(m, p, 70);

  // Omega = 0 reduces to the Grassmann exponential.
  const ComplexMatrix Hg = random_stiefel_tangent(Y, 71, /*grassmann_only=*/true);
  const TangentVector grass_as_stiefel = stiefel_tangent(Y, Hg);
  const TangentVector grass = grassmann_tangent(Y, Hg);
  CHECK((exp_stiefel_exact(grass_as_stiefel, 0.6) - exp_grassmann_exact(grass, 0.6))
            .norm() <= 1e-10);

  // m = p reduces to Y e^{t Omega}.
  const ComplexMatrix U = random_unitary(p, 72);
  const ComplexMatrix Hs = random_stiefel_tangent(U, 73);
  const ComplexMatrix Om = U.adjoint() * Hs;
  CHECK((exp_stiefel_exact(stiefel_tangent(U, Hs), 0.8) -
         U * expm_skew(0.8 * skew_part(Om))).norm() <= 1e-10);

  const TangentVector tv = stiefel_tangent(Y, random_stiefel_tangent(Y, 74));
  CHECK((exp_stiefel_exact(tv, 0.0) - Y).norm() <= 1e-12);
  CHECK_THROWS_AS(exp_stiefel_exact(stiefel_tangent(Y, Y), 0.1), StructureError);
}

TEST_CASE("retract_stiefel order-1 equals the classical polar retraction") {
  const ComplexMatrix Y = random_stiefel_point(15, 5, 80);
  const TangentVector tv = stiefel_tangent(Y, random_stiefel_tangent(Y, 81));
  const double t = 0.25;
  const ComplexMatrix R = retract_stiefel(tv, t, make_spec(Manifold::Stiefel, 1));
  CHECK((R - polar_svd(Y + t * tv.direction).U).norm() <= 1e-12);
  CHECK_THROWS_AS(
      retract_stiefel(tv, t, make_spec(Manifold::Stiefel, 1, Projector::QR)),
      ConfigError);
}

TEST_CASE("retract_stiefel reduces to the Grassmann coefficients when Y*H = 0") {
  const ComplexMatrix Y = random_stiefel_point(18, 5, 82);
  const ComplexMatrix H = random_stiefel_tangent(Y, 83, /*grassmann_only=*/true);
  for (int n : {1, 2, 3}) {
    const ComplexMatrix Rs =
        retract_stiefel(stiefel_tangent(Y, H), 0.4, make_spec(Manifold::Stiefel, n));
    const ComplexMatrix Rg = retract_grassmann(grassmann_tangent(Y, H), 0.4,
                                               make_spec(Manifold::Grassmann, n));
    CHECK((Rs - Rg).norm() <= 1e-9);
  }
}

TEST_CASE("retract_stiefel generic order n+1, Grassmann-only order 2n+1") {
  const int m = 30, p = 6;
  const ComplexMatrix Y = random_stiefel_point(m, p, 84);
  const TangentVector generic = stiefel_tangent(Y, random_stiefel_tangent(Y, 85));
  const TangentVector tangent0 =
      stiefel_tangent(Y, random_stiefel_tangent(Y, 85, true));

  for (int n : {1, 2, 3}) {
    const RetractionSpec spec = make_spec(Manifold::Stiefel, n);
    double prev = -1.0, slope_sum = 0.0;
    int slopes = 0;
    for (int k = 0; k < 4; ++k) {
      const double t = 0.4 * std::pow(2.0, -k);
      const double err =
          (retract_stiefel(generic, t, spec) - exp_stiefel_exact(generic, t)).norm();
      if (prev > 0.0 && err > 1e-12) {
        slope_sum += observed_slope(prev, err);
        ++slopes;
      }
      prev = err;
    }
    REQUIRE(slopes >= 2);
    const double mean = slope_sum / slopes;
    CHECK(mean >= n + 1 - 0.3);
    CHECK(mean < n + 2);  // the generic bound is sharp on random inputs

    prev = -1.0;
    slope_sum = 0.0;
    slopes = 0;
    for (int k = 0; k < 4; ++k) {
      const double t = 1.2 * std::pow(2.0, -k);
      const double err =
          (retract_stiefel(tangent0, t, spec) - exp_stiefel_exact(tangent0, t)).norm();
      if (prev > 0.0 && err > 1e-12) {
        slope_sum += observed_slope(prev, err);
        ++slopes;
      }
      prev = err;
    }
    REQUIRE(slopes >= 2);
    CHECK(slope_sum / slopes == doctest::Approx(2.0 * n + 1).epsilon(0.15));
  }
}

TEST_CASE("outputs stay orthonormal across the sweep") {
  const ComplexMatrix Om = 10.0 * random_skew_hermitian(12, 90);
  const ComplexMatrix Y = random_stiefel_point(25, 5, 91);
  const TangentVector tg = grassmann_tangent(Y, random_grassmann_tangent(Y, 92));
  const TangentVector ts = stiefel_tangent(Y, random_stiefel_tangent(Y, 93));
  for (int k = 0; k < 6; ++k) {
    const double t = 0.8 * std::pow(2.0, -k);
    for (int n : {1, 2, 3}) {
      CHECK(unitarity_defect(retract_unitary(Om, t, make_spec(Manifold::Unitary, n))) <=
            1e-10 * 12);
      CHECK(unitarity_defect(retract_grassmann(
                tg, t, make_spec(Manifold::Grassmann, n))) <= 1e-10 * 5);
      CHECK(unitarity_defect(retract_grassmann(
                tg, t, make_spec(Manifold::Grassmann, n, Projector::QR))) <= 1e-10 * 5);
      CHECK(unitarity_defect(retract_stiefel(ts, t, make_spec(Manifold::Stiefel, n))) <=
            1e-10 * 5);
    }
  }
}

TEST_CASE("rotational equivariance") {
  const int m = 16, p = 4;
  const ComplexMatrix Y = random_stiefel_point(m, p, 94);
  const ComplexMatrix V = random_unitary(m, 95);
  const double t = 0.35;

  const ComplexMatrix Hg = random_grassmann_tangent(Y, 96);
  const RetractionSpec pg = make_spec(Manifold::Grassmann, 2);
  CHECK((retract_grassmann(grassmann_tangent(V * Y, V * Hg), t, pg) -
         V * retract_grassmann(grassmann_tangent(Y, Hg), t, pg)).norm() <= 1e-9);

  // QR projector: equality holds as subspaces.
  const RetractionSpec qg = make_spec(Manifold::Grassmann, 2, Projector::QR);
  CHECK(dist_grassmann(retract_grassmann(grassmann_tangent(V * Y, V * Hg), t, qg),
                       V * retract_grassmann(grassmann_tangent(Y, Hg), t, qg)) <= 1e-9);

  const ComplexMatrix Hs = random_stiefel_tangent(Y, 97);
  const RetractionSpec ps = make_spec(Manifold::Stiefel, 2);
  CHECK((retract_stiefel(stiefel_tangent(V * Y, V * Hs), t, ps) -
         V * retract_stiefel(stiefel_tangent(Y, Hs), t, ps)).norm() <= 1e-9);
}

TEST_CASE("first-order retraction property: ||R(t) - (Y + tH)|| = O(t^2)") {
  const ComplexMatrix Y = random_stiefel_point(18, 4, 98);
  const ComplexMatrix Om = 5.0 * random_skew_hermitian(10, 99);
  const TangentVector tg = grassmann_tangent(Y, random_grassmann_tangent(Y, 100));
  const TangentVector ts = stiefel_tangent(Y, random_stiefel_tangent(Y, 101));

  auto check_order_two = [](auto&& deviation) {
    double prev = -1.0, slope_sum = 0.0;
    int slopes = 0;
    for (int k = 0; k < 4; ++k) {
      const double t = 0.2 * std::pow(2.0, -k);
      const double err = deviation(t);
      if (prev > 0.0 && err > 1e-12) {
        slope_sum += observed_slope(prev, err);
        ++slopes;
      }
      prev = err;
    }
    REQUIRE(slopes >= 2);
    CHECK(slope_sum / slopes >= 2.0 - 0.2);
  };

  for (int n : {1, 2, 3}) {
    check_order_two([&](double t) {
      return (retract_unitary(Om, t, make_spec(Manifold::Unitary, n)) -
              (ComplexMatrix::Identity(10, 10) + t * Om)).norm();
    });
    check_order_two([&](double t) {
      return (retract_grassmann(tg, t, make_spec(Manifold::Grassmann, n)) -
              (Y + t * tg.direction)).norm();
    });
    check_order_two([&](double t) {
      return (retract_stiefel(ts, t, make_spec(Manifold::Stiefel, n)) -
              (Y + t * ts.direction)).norm();
    });
  }
}

TEST_CASE("dist_unitary") {
  const ComplexMatrix U = random_unitary(6, 110);
  CHECK(dist_unitary(U, U) <= 1e-12);

  ComplexMatrix V = ComplexMatrix::Identity(2, 2);
  V(0, 0) = std::polar(1.0, 0.3);
  CHECK(dist_unitary(ComplexMatrix::Identity(2, 2), V) ==
        doctest::Approx(0.3 / std::sqrt(2.0)).epsilon(1e-10));

  const ComplexMatrix W = random_unitary(6, 111);
  CHECK(std::abs(dist_unitary(U, W) - dist_unitary(W, U)) <= 1e-12);
  CHECK_THROWS_AS(dist_unitary(U, 2.0 * W), StructureError);
}

TEST_CASE("dist_grassmann") {
  const ComplexMatrix X = random_stiefel_point(9, 3, 112);
  CHECK(dist_grassmann(X, X) <= 1e-12);

  ComplexMatrix e1(2, 1), e2(2, 1);
  e1 << 1.0, 0.0;
  e2 << 0.0, 1.0;
  CHECK(dist_grassmann(e1, e2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  // Gauge invariance and agreement with the sigma-sum closed form.
  const ComplexMatrix Y = random_stiefel_point(9, 3, 113);
  const ComplexMatrix V = random_unitary(3, 114);
  CHECK(std::abs(dist_grassmann(X * V, Y) - dist_grassmann(X, Y)) <= 1e-12);
  const auto sigma = (X.adjoint() * Y).jacobiSvd().singularValues();
  double sum = 0.0;
  for (int i = 0; i < 3; ++i)
    sum += std::min(1.0, sigma(i));
  const double closed_form = std::sqrt(std::max(0.0, 6.0 - 2.0 * sum));
  CHECK(dist_grassmann(X, Y) == doctest::Approx(closed_form).epsilon(1e-9));

  CHECK_THROWS_AS(dist_grassmann(X, 2.0 * Y), StructureError);
}

TEST_CASE("check_tangent diagnostics") {
  const ComplexMatrix Y = random_stiefel_point(8, 2, 115);
  CHECK(check_tangent(grassmann_tangent(Y, random_grassmann_tangent(Y, 116))).pass);
  CHECK(check_tangent(grassmann_tangent(Y, ComplexMatrix::Zero(8, 2))).pass);

  const TangentReport bad = check_tangent(grassmann_tangent(Y, Y));
  CHECK_FALSE(bad.pass);
  CHECK(bad.grassmann_defect == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));

  CHECK(check_tangent(unitary_tangent(random_skew_hermitian(5, 117))).pass);
  CHECK_FALSE(check_tangent(unitary_tangent(complex_gaussian(5, 5, 118))).pass);
  CHECK(check_tangent(stiefel_tangent(Y, random_stiefel_tangent(Y, 119))).pass);
}

TEST_CASE("step guard rejects rank-destroying steps") {
  // For skew-Hermitian input Theta_n(tOm) never loses rank (its eigenvalues
  // Theta_n(it*lambda) stay away from zero on the imaginary axis), so the
  // guard is exercised on the Grassmannian: a direction with degenerate H*H
  // leaves one column of Y alpha + tH beta at O(1) while the rest grow like
  // t^2, and the sigma ratio collapses at large t.
  const ComplexMatrix Y = random_stiefel_point(10, 2, 200);
  const ComplexMatrix Yp = orth_completion(Y);
  ComplexMatrix K = ComplexMatrix::Zero(8, 2);
  K(0, 0) = 1.0;
  const ComplexMatrix H = Yp * K;
  const TangentVector tv = grassmann_tangent(Y, H);
  const RetractionSpec spec = make_spec(Manifold::Grassmann, 2);
  CHECK_THROWS_AS(retract_grassmann(tv, 1e8, spec), StepTooLargeError);
  CHECK_THROWS_AS(
      retract_grassmann(tv, 1e8, make_spec(Manifold::Grassmann, 2, Projector::QR)),
      StepTooLargeError);
  CHECK_NOTHROW(retract_grassmann(tv, 0.1, spec));
}
