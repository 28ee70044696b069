#include "projpoly/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <ostream>
#include <sstream>

namespace projpoly {

namespace {

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

bool level_valid(const LevelResult& lv) {
  return !lv.floored && std::isfinite(lv.error);
}

}  // namespace

void ExperimentConfig::validate() const {
  if (levels < 2)
    throw ConfigError("config: levels must be >= 2");
  if (!(t0 > 0.0))
    throw ConfigError("config: t0 must be > 0");
  if (p < 1 || m < p)
    throw ConfigError("config: requires m >= p >= 1");
  if (n_list.empty())
    throw ConfigError("config: n list must not be empty");
  if (projector == Projector::QR && manifold != Experiment::Grassmann)
    throw ConfigError("config: the QR projector applies to the Grassmannian only");
  if (tangent_mode != TangentMode::Generic && manifold != Experiment::Stiefel)
    throw ConfigError("config: tangent mode applies to the Stiefel manifold only");
  for (int n : n_list) {
    switch (manifold) {
      case Experiment::Unitary:
      case Experiment::Grassmann:
        if (n < 0 || n > kMaxBesselOrder)
          throw ConfigError("config: n must lie in [0, 12]");
        break;
      case Experiment::Stiefel:
        if (n < 1 || n > 3)
          throw ConfigError("config: Stiefel supports n in {1,2,3}");
        break;
      case Experiment::Means:
        if (n < 1)
          throw ConfigError("config: means runs need a positive count");
        break;
    }
  }
}

std::vector<double> observed_order(const std::vector<double>& errors) {
  if (errors.size() < 2)
    throw DomainError("observed_order: needs at least two error values");
  std::vector<double> orders;
  orders.reserve(errors.size() - 1);
  for (std::size_t k = 1; k < errors.size(); ++k) {
    if (!(errors[k - 1] > 0.0) || !(errors[k] > 0.0))
      throw DomainError("observed_order: errors must be positive");
    orders.push_back(std::log2(errors[k - 1] / errors[k]));
  }
  return orders;
}

std::vector<LevelResult> assemble_levels(double t0, const std::vector<double>& errors) {
  std::vector<LevelResult> levels(errors.size());
  for (std::size_t k = 0; k < errors.size(); ++k) {
    LevelResult& lv = levels[k];
    lv.level = static_cast<int>(k);
    lv.t = t0 * std::pow(2.0, -static_cast<double>(k));
    lv.error = errors[k];
    lv.floored = !std::isfinite(errors[k]) || errors[k] < kErrorFloor;
    if (k > 0 && level_valid(levels[k - 1]) && level_valid(lv) && lv.error > 0.0 &&
        levels[k - 1].error > 0.0)
      lv.order = std::log2(levels[k - 1].error / lv.error);
  }
  return levels;
}

std::optional<double> mean_valid_order(const SeriesResult& series) {
  double sum = 0.0;
  int count = 0;
  const auto& levels = series.levels;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (!levels[k].order)
      continue;
    // Skip the order into a last pre-floor level.
    if (k + 1 < levels.size() && levels[k + 1].floored && !levels[k].floored)
      continue;
    sum += *levels[k].order;
    ++count;
  }
  if (count == 0)
    return std::nullopt;
  return sum / count;
}

std::string to_string(Experiment e) {
  switch (e) {
    case Experiment::Unitary: return "unitary";
    case Experiment::Grassmann: return "grassmann";
    case Experiment::Stiefel: return "stiefel";
    case Experiment::Means: return "means";
  }
  return "?";
}

std::string to_string(Projector p) {
  return p == Projector::Polar ? "polar" : "qr";
}

std::string to_string(PolarMethod m) {
  switch (m) {
    case PolarMethod::SVD: return "svd";
    case PolarMethod::Newton: return "newton";
    case PolarMethod::NewtonRect: return "newton-rect";
    case PolarMethod::NewtonSchulz: return "newton-schulz";
  }
  return "?";
}

std::string to_string(TangentMode m) {
  return m == TangentMode::Generic ? "generic" : "grassmann-only";
}

namespace {

void emit_csv(const ConvergenceReport& report, std::ostream& os) {
  os << "level,t,n,error,order,floored\n";
  for (const auto& series : report.results) {
    for (const auto& lv : series.levels) {
      os << lv.level << ',' << fmt17(lv.t) << ',' << series.n << ','
         << fmt17(lv.error) << ',';
      if (lv.order)
        os << fmt17(*lv.order);
      os << ',' << (lv.floored ? "true" : "false") << '\n';
    }
  }
}

nlohmann::json config_json(const ExperimentConfig& cfg) {
  return {{"manifold", to_string(cfg.manifold)},
          {"m", cfg.m},
          {"p", cfg.p},
          {"n_list", cfg.n_list},
          {"t0", cfg.t0},
          {"levels", cfg.levels},
          {"seed", cfg.seed},
          {"projector", to_string(cfg.projector)},
          {"polar_method", to_string(cfg.polar_method)},
          {"tangent_mode", to_string(cfg.tangent_mode)}};
}

void emit_json(const ConvergenceReport& report, std::ostream& os) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& series : report.results) {
    nlohmann::json levels = nlohmann::json::array();
    for (const auto& lv : series.levels) {
      nlohmann::json entry = {{"level", lv.level},
                              {"t", lv.t},
                              {"error", lv.error},
                              {"floored", lv.floored}};
      entry["order"] = lv.order ? nlohmann::json(*lv.order) : nlohmann::json();
      levels.push_back(std::move(entry));
    }
    results.push_back({{"n", series.n}, {"levels", std::move(levels)}});
  }
  nlohmann::json doc = {{"config", config_json(report.config)},
                        {"results", std::move(results)}};
  os << doc.dump(2) << '\n';
}

void emit_table(const ConvergenceReport& report, std::ostream& os) {
  char buf[64];
  os << "manifold=" << to_string(report.config.manifold)
     << " m=" << report.config.m << " p=" << report.config.p
     << " t0=" << fmt17(report.config.t0) << " seed=" << report.config.seed
     << " projector=" << to_string(report.config.projector)
     << " polar-method=" << to_string(report.config.polar_method) << '\n';

  os << "  t0/t";
  for (const auto& series : report.results) {
    std::snprintf(buf, sizeof(buf), " | %12s %7s", ("n=" + std::to_string(series.n) + " Error").c_str(),
                  "Order");
    os << buf;
  }
  os << '\n';

  const std::size_t nlevels =
      report.results.empty() ? 0 : report.results.front().levels.size();
  for (std::size_t k = 0; k < nlevels; ++k) {
    std::snprintf(buf, sizeof(buf), "%6.0f", std::pow(2.0, static_cast<double>(k)));
    os << buf;
    for (const auto& series : report.results) {
      const auto& lv = series.levels[k];
      std::snprintf(buf, sizeof(buf), " | %12.3e%s", lv.error,
                    lv.floored ? "*" : " ");
      os << buf;
      if (lv.order)
        std::snprintf(buf, sizeof(buf), "%6.3f ", *lv.order);
      else
        std::snprintf(buf, sizeof(buf), "%6s ", "-");
      os << buf;
    }
    os << '\n';
  }
  os << "(*) level below the 1e-12 error floor; excluded from order estimates\n";
}

}  // namespace

void emit_report(const ConvergenceReport& report, OutputFormat format, std::ostream& os) {
  switch (format) {
    case OutputFormat::Csv:
      emit_csv(report, os);
      break;
    case OutputFormat::Json:
      emit_json(report, os);
      break;
    case OutputFormat::Table:
      emit_table(report, os);
      break;
  }
  if (!os)
    throw IoError("emit_report: stream write failed");
}

void emit_report(const ConvergenceReport& report, OutputFormat format,
                 const std::string& path) {
  if (path.empty() || path == "-") {
    emit_report(report, format, std::cout);
    return;
  }
  std::ofstream file(path, std::ios::binary);  // binary keeps LF endings
  if (!file)
    throw IoError("emit_report: cannot open '" + path + "' for writing");
  emit_report(report, format, file);
  if (!file)
    throw IoError("emit_report: write to '" + path + "' failed");
}

}  // namespace projpoly
