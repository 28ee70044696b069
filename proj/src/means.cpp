#include "projpoly/means.hpp"

#include <cmath>
#include <numbers>

namespace projpoly {

namespace {

void require_unitary_family(const std::vector<ComplexMatrix>& Us, const Weights& w,
                            const char* op) {
  if (Us.empty())
    throw DomainError(std::string(op) + ": needs at least one matrix");
  if (w.size() != static_cast<int>(Us.size()))
    throw DomainError(std::string(op) + ": weight count does not match data");
  const auto m = Us.front().rows();
  for (const auto& U : Us) {
    if (U.rows() != m || U.cols() != m)
      throw DimensionError(std::string(op) + ": matrices must be square and equal-sized");
    if (unitarity_defect(U) > 1e-8 * std::max<double>(1.0, static_cast<double>(m)))
      throw StructureError(std::string(op) + ": inputs must be unitary");
  }
}

}  // namespace

Weights::Weights(std::vector<double> values) : w(std::move(values)) {
  if (w.empty())
    throw DomainError("Weights: must not be empty");
  double sum = 0.0;
  for (double wi : w)
    sum += wi;
  if (std::abs(sum - 1.0) > 1e-14)
    throw DomainError("Weights: entries must sum to 1 within 1e-14");
}

Weights Weights::uniform(int n) {
  if (n < 1)
    throw DomainError("Weights::uniform: n must be >= 1");
  std::vector<double> w(n, 1.0 / n);
  // Make the sum exactly 1 in floating point.
  double sum = 0.0;
  for (int i = 0; i + 1 < n; ++i)
    sum += w[i];
  w[n - 1] = 1.0 - sum;
  return Weights(std::move(w));
}

ComplexMatrix arithmetic_mean(const std::vector<ComplexMatrix>& Us, const Weights& w) {
  require_unitary_family(Us, w, "arithmetic_mean");
  ComplexMatrix sum = w.w[0] * Us[0];
  for (std::size_t i = 1; i < Us.size(); ++i)
    sum += w.w[i] * Us[i];
  try {
    return polar_svd(sum).U;
  } catch (const RankError&) {
    throw SingularityError(
        "arithmetic_mean: weighted sum is singular (antipodal data)");
  }
}

GeometricMeanResult geometric_mean(const std::vector<ComplexMatrix>& Us,
                                   const Weights& w, const IterationConfig& cfg) {
  require_unitary_family(Us, w, "geometric_mean");
  cfg.validate();
  // Cluster-radius precondition keeps every log far from the branch cut
  // throughout the iteration.
  for (std::size_t i = 0; i < Us.size(); ++i)
    for (std::size_t j = i + 1; j < Us.size(); ++j)
      if (dist_unitary(Us[i], Us[j]) > std::numbers::pi / 4.0)
        throw DomainError(
            "geometric_mean: data are not pairwise within geodesic distance pi/4");

  ComplexMatrix G = arithmetic_mean(Us, w);
  const auto m = G.rows();
  for (int k = 0;; ++k) {
    ComplexMatrix R = ComplexMatrix::Zero(m, m);
    for (std::size_t i = 0; i < Us.size(); ++i)
      R += w.w[i] * logm_unitary(G.adjoint() * Us[i]);
    const double residual = R.norm();
    if (residual <= cfg.tol)
      return {std::move(G), k, residual};
    if (k == cfg.max_iters)
      throw NonConvergenceError("geometric_mean: max_iters exceeded", residual,
                                cfg.max_iters);
    G = G * expm_skew(R);
  }
}

ComplexMatrix interpolate_polar(const ComplexMatrix& U1, const ComplexMatrix& U2,
                                double s) {
  if (s < 0.0 || s > 1.0)
    throw DomainError("interpolate_polar: s must lie in [0, 1]");
  require_unitary_family({U1, U2}, Weights({0.5, 0.5}), "interpolate_polar");
  try {
    return polar_svd((1.0 - s) * U1 + s * U2).U;
  } catch (const RankError&) {
    throw SingularityError("interpolate_polar: singular convex combination");
  }
}

ConvergenceReport supercloseness_experiment(const ExperimentConfig& cfg,
                                            const Weights& w,
                                            const IterationConfig& karcher) {
  cfg.validate();
  if (cfg.manifold != Experiment::Means)
    throw ConfigError("supercloseness_experiment: config manifold must be means");
  const int count = cfg.n_list.front();
  if (w.size() != count)
    throw ConfigError("supercloseness_experiment: weights must match the count");

  std::vector<ComplexMatrix> omegas;
  omegas.reserve(count);
  for (int i = 0; i < count; ++i)
    omegas.push_back(random_skew_hermitian(cfg.m, cfg.seed + static_cast<std::uint64_t>(i)));

  std::vector<double> errors(cfg.levels);
  for (int k = 0; k < cfg.levels; ++k) {
    const double t = cfg.t0 * std::pow(2.0, -k);
    std::vector<ComplexMatrix> Us;
    Us.reserve(count);
    for (const auto& Om : omegas)
      Us.push_back(expm_skew(t * Om));
    const ComplexMatrix A = arithmetic_mean(Us, w);
    const ComplexMatrix G = geometric_mean(Us, w, karcher).G;
    errors[k] = (A - G).norm();
  }

  ConvergenceReport report;
  report.config = cfg;
  report.results.push_back({count, assemble_levels(cfg.t0, errors)});
  return report;
}

ConvergenceReport supercloseness_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  return supercloseness_experiment(cfg, Weights::uniform(cfg.n_list.front()));
}

}  // namespace projpoly
