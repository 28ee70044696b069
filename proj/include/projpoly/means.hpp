#pragma once

#include "projpoly/report.hpp"

namespace projpoly {

// Weights summing to 1 (entries may be negative; the default generators use
// positive weights).
struct Weights {
  std::vector<double> w;

  explicit Weights(std::vector<double> values);
  static Weights uniform(int n);
  int size() const { return static_cast<int>(w.size()); }
};

// Weighted arithmetic mean P(sum_i w_i U_i); the Frobenius-nearest unitary
// matrix to the weighted combination.
ComplexMatrix arithmetic_mean(const std::vector<ComplexMatrix>& Us, const Weights& w);

struct GeometricMeanResult {
  ComplexMatrix G;
  int iterations = 0;
  double residual = 0.0;  // ||sum_i w_i log(G* U_i)|| at return
};

// Weighted geometric (Karcher) mean, characterized by
// sum_i w_i log(G* U_i) = 0.  Fixed-point iteration
// G <- G exp(sum_i w_i log(G* U_i)) initialized at the arithmetic mean;
// requires the data pairwise within geodesic distance pi/4.
GeometricMeanResult geometric_mean(const std::vector<ComplexMatrix>& Us,
                                   const Weights& w, const IterationConfig& cfg = {});

// Polar projection of the convex combination (1-s)U1 + sU2.  Follows the
// geodesic from U1 to U2 to O(t^3), exactly at s = 1/2.
ComplexMatrix interpolate_polar(const ComplexMatrix& U1, const ComplexMatrix& U2,
                                double s);

// Sweeps t over cfg.levels dyadic halvings from cfg.t0, measuring
// ||arithmetic_mean - geometric_mean||_F for clustered data
// U_i(t) = e^{t Omega_i}, Omega_i seeded unit-norm skew-Hermitian.
// cfg.n_list.front() is the number of unitaries; weights default to uniform.
ConvergenceReport supercloseness_experiment(const ExperimentConfig& cfg,
                                            const Weights& w,
                                            const IterationConfig& karcher = {1e-13, 200});
ConvergenceReport supercloseness_experiment(const ExperimentConfig& cfg);

}  // namespace projpoly
