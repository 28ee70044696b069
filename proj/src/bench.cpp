#include "projpoly/bench.hpp"

#include <cmath>
#include <functional>
#include <limits>

namespace projpoly {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

RetractionSpec spec_for(const ExperimentConfig& cfg, Manifold manifold, int n) {
  RetractionSpec spec;
  spec.manifold = manifold;
  spec.order_n = n;
  spec.projector = cfg.projector;
  spec.polar_method = cfg.polar_method;
  return spec;
}

// Sweeps every (n, level) pair; the exact exponential per level is shared
// across n values.
ConvergenceReport sweep(const ExperimentConfig& cfg,
                        const std::function<ComplexMatrix(double)>& exact,
                        const std::function<ComplexMatrix(int, double)>& approx,
                        const std::function<double(const ComplexMatrix&,
                                                   const ComplexMatrix&)>& metric) {
  std::vector<ComplexMatrix> exacts(cfg.levels);
  for (int k = 0; k < cfg.levels; ++k)
    exacts[k] = exact(cfg.t0 * std::pow(2.0, -k));

  ConvergenceReport report;
  report.config = cfg;
  for (int n : cfg.n_list) {
    std::vector<double> errors(cfg.levels);
    for (int k = 0; k < cfg.levels; ++k) {
      const double t = cfg.t0 * std::pow(2.0, -k);
      try {
        errors[k] = metric(approx(n, t), exacts[k]);
      } catch (const StepTooLargeError&) {
        errors[k] = kNaN;  // skipped level, flagged in the report
      }
    }
    report.results.push_back({n, assemble_levels(cfg.t0, errors)});
  }
  return report;
}

double frobenius_metric(const ComplexMatrix& A, const ComplexMatrix& B) {
  return (A - B).norm();
}

ConvergenceReport run_unitary(const ExperimentConfig& cfg) {
  const ComplexMatrix Omega = random_skew_hermitian(cfg.m, cfg.seed);
  return sweep(
      cfg, [&](double t) { return expm_skew(t * Omega); },
      [&](int n, double t) {
        return retract_unitary(Omega, t, spec_for(cfg, Manifold::Unitary, n));
      },
      frobenius_metric);
}

ConvergenceReport run_grassmann(const ExperimentConfig& cfg) {
  const ComplexMatrix Y = random_stiefel_point(cfg.m, cfg.p, cfg.seed);
  const TangentVector tv = grassmann_tangent(Y, random_grassmann_tangent(Y, cfg.seed + 1));
  std::function<double(const ComplexMatrix&, const ComplexMatrix&)> metric =
      frobenius_metric;
  if (cfg.projector == Projector::QR)
    metric = [](const ComplexMatrix& A, const ComplexMatrix& B) {
      return dist_grassmann(A, B);
    };
  return sweep(
      cfg, [&](double t) { return exp_grassmann_exact(tv, t); },
      [&](int n, double t) {
        return retract_grassmann(tv, t, spec_for(cfg, Manifold::Grassmann, n));
      },
      metric);
}

ConvergenceReport run_stiefel(const ExperimentConfig& cfg) {
  const ComplexMatrix Y = random_stiefel_point(cfg.m, cfg.p, cfg.seed);
  const bool grassmann_only = cfg.tangent_mode == TangentMode::GrassmannOnly;
  const TangentVector tv =
      stiefel_tangent(Y, random_stiefel_tangent(Y, cfg.seed + 1, grassmann_only));
  return sweep(
      cfg, [&](double t) { return exp_stiefel_exact(tv, t); },
      [&](int n, double t) {
        return retract_stiefel(tv, t, spec_for(cfg, Manifold::Stiefel, n));
      },
      frobenius_metric);
}

}  // namespace

ConvergenceReport run_convergence_study(const ExperimentConfig& cfg) {
  cfg.validate();
  switch (cfg.manifold) {
    case Experiment::Unitary:
      return run_unitary(cfg);
    case Experiment::Grassmann:
      return run_grassmann(cfg);
    case Experiment::Stiefel:
      return run_stiefel(cfg);
    case Experiment::Means:
      return supercloseness_experiment(cfg);
  }
  throw ConfigError("run_convergence_study: unknown experiment kind");
}

}  // namespace projpoly
