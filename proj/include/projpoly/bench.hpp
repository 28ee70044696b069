#pragma once

#include "projpoly/means.hpp"
#include "projpoly/report.hpp"

namespace projpoly {

// Runs a seeded dyadic-refinement study: generates the configured random
// inputs, computes retraction-vs-exact-exponential errors (or the means
// supercloseness gap) over levels halvings of t0, and assembles per-level
// observed orders with floor flags.  Deterministic per seed; a level whose
// step is too large for the retraction is skipped (error NaN, flagged).
ConvergenceReport run_convergence_study(const ExperimentConfig& cfg);

}  // namespace projpoly
