// retractbench: dyadic-refinement convergence studies for the projected
// polynomial retractions and unitary-mean supercloseness.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <CLI11.hpp>
#include <iostream>
#include <map>
#include <string>

#include "projpoly/bench.hpp"

namespace {

using namespace projpoly;

struct CliOptions {
  ExperimentConfig cfg;
  std::string format = "table";
  std::string out = "-";
};

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  if (name == "table") return OutputFormat::Table;
  throw ConfigError("unknown format '" + name + "'");
}

void add_common_options(CLI::App* sub, CliOptions& opts) {
  sub->add_option("--m", opts.cfg.m, "ambient dimension m");
  sub->add_option("--p", opts.cfg.p, "column count p");
  sub->add_option("--n", opts.cfg.n_list,
                  "comma-separated polynomial orders (count for means)")
      ->delimiter(',');
  sub->add_option("--t0", opts.cfg.t0, "largest step of the dyadic sweep");
  sub->add_option("--levels", opts.cfg.levels, "number of dyadic halvings");
  sub->add_option("--seed", opts.cfg.seed, "RNG seed");
  sub->add_option("--projector", opts.cfg.projector, "projector")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Projector>{{"polar", Projector::Polar},
                                           {"qr", Projector::QR}}));
  sub->add_option("--polar-method", opts.cfg.polar_method, "polar iteration")
      ->transform(CLI::CheckedTransformer(std::map<std::string, PolarMethod>{
          {"svd", PolarMethod::SVD},
          {"newton", PolarMethod::Newton},
          {"newton-rect", PolarMethod::NewtonRect},
          {"newton-schulz", PolarMethod::NewtonSchulz}}));
  sub->add_option("--tangent", opts.cfg.tangent_mode, "Stiefel tangent mode")
      ->transform(CLI::CheckedTransformer(std::map<std::string, TangentMode>{
          {"generic", TangentMode::Generic},
          {"grassmann-only", TangentMode::GrassmannOnly}}));
  sub->add_option("--format", opts.format, "csv|json|table");
  sub->add_option("--out", opts.out, "output path ('-' for stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convergence-order benchmarks for projected polynomial retractions"};
  app.require_subcommand(1);

  CliOptions opts;
  auto* unitary = app.add_subcommand("unitary", "exponential on the unitary group");
  auto* grassmann = app.add_subcommand("grassmann", "Grassmann exponential");
  auto* stiefel = app.add_subcommand("stiefel", "Stiefel exponential");
  auto* means = app.add_subcommand("means", "arithmetic vs geometric mean gap");
  for (auto* sub : {unitary, grassmann, stiefel, means})
    add_common_options(sub, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (unitary->parsed()) {
    opts.cfg.manifold = Experiment::Unitary;
  } else if (grassmann->parsed()) {
    opts.cfg.manifold = Experiment::Grassmann;
    if (!grassmann->count("--m")) opts.cfg.m = 200;
    if (!grassmann->count("--p")) opts.cfg.p = 20;
  } else if (stiefel->parsed()) {
    opts.cfg.manifold = Experiment::Stiefel;
    if (!stiefel->count("--m")) opts.cfg.m = 200;
    if (!stiefel->count("--p")) opts.cfg.p = 20;
  } else {
    opts.cfg.manifold = Experiment::Means;
    if (!means->count("--m")) opts.cfg.m = 20;
    if (!means->count("--n")) opts.cfg.n_list = {3};
  }

  try {
    const ConvergenceReport report = run_convergence_study(opts.cfg);
    emit_report(report, parse_format(opts.format), opts.out);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
