#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "projpoly/retract.hpp"

namespace projpoly {

// What a benchmark run sweeps: a retraction family or the means experiment.
enum class Experiment { Unitary, Grassmann, Stiefel, Means };
enum class TangentMode { Generic, GrassmannOnly };
enum class OutputFormat { Csv, Json, Table };

// Levels with errors below this are flagged and never used for order
// estimates; high-order methods hit roundoff within a few halvings.
inline constexpr double kErrorFloor = 1e-12;

struct ExperimentConfig {
  Experiment manifold = Experiment::Unitary;
  int m = 50;
  int p = 1;
  std::vector<int> n_list = {1, 2, 3};  // unitary count for Means runs
  double t0 = 0.01;
  int levels = 6;
  std::uint64_t seed = 1;
  Projector projector = Projector::Polar;
  PolarMethod polar_method = PolarMethod::SVD;
  TangentMode tangent_mode = TangentMode::Generic;  // Stiefel only

  void validate() const;
};

struct LevelResult {
  int level = 0;
  double t = 0.0;
  double error = 0.0;
  std::optional<double> order;  // log2(e_{k-1}/e_k); empty on the first level
  bool floored = false;
};

struct SeriesResult {
  int n = 0;
  std::vector<LevelResult> levels;
};

struct ConvergenceReport {
  ExperimentConfig config;
  std::vector<SeriesResult> results;
};

// o_k = log2(e_{k-1}/e_k) for consecutive entries.  Requires at least two
// strictly positive errors.
std::vector<double> observed_order(const std::vector<double>& errors);

// Applies floor flags and fills per-level orders; orders are defined only
// between consecutive non-floored levels.  NaN errors mark skipped levels
// and are flagged like floored ones.
std::vector<LevelResult> assemble_levels(double t0, const std::vector<double>& errors);

// Order statistic used for acceptance: the mean of the defined orders,
// excluding any order into a last pre-floor level (contaminated by
// roundoff).  Empty when no order survives.
std::optional<double> mean_valid_order(const SeriesResult& series);

std::string to_string(Experiment e);
std::string to_string(Projector p);
std::string to_string(PolarMethod m);
std::string to_string(TangentMode m);

void emit_report(const ConvergenceReport& report, OutputFormat format, std::ostream& os);

// Writes to the given path; "-" (or empty) means standard output.
void emit_report(const ConvergenceReport& report, OutputFormat format,
                 const std::string& path);

}  // namespace projpoly
