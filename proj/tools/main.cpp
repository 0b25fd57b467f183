#include <cstdlib>
#include <exception>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "capsample/errors.hpp"
#include "capsample/version.hpp"
#include "commands.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CAPSAMPLE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("CAPSAMPLE_SEED is not a valid integer");
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace capsample::cli;

  CLI::App app{
      "capsample: uniform random directions on n-dimensional spherical caps "
      "and hollow cones"};
  app.set_version_flag("--version", capsample::kVersion);
  app.require_subcommand(1);

  SampleConfig sample_cfg;
  CostConfig cost_cfg;
  ValidateConfig validate_cfg;
  BaselineConfig baseline_cfg;

  CLI::App* sample = app.add_subcommand(
      "sample", "Generate unit vectors on a cap or hollow cone");
  sample->add_option("--dim", sample_cfg.dimension, "Dimension n (>= 2)")
      ->required();
  sample->add_option("--theta0", sample_cfg.theta0,
                     "Cap planar angle in radians");
  sample->add_option("--theta1", sample_cfg.theta1,
                     "Hollow cone inner planar angle in radians");
  sample->add_option("--theta2", sample_cfg.theta2,
                     "Hollow cone outer planar angle in radians");
  sample->add_option("--omega1", sample_cfg.omega1,
                     "Hollow cone inner solid-angle fraction");
  sample->add_option("--omega2", sample_cfg.omega2,
                     "Hollow cone outer solid-angle fraction");
  sample->add_option("--axis-index", sample_cfg.axis.index_one_based,
                     "Canonical axis index (1-based; default n)");
  sample->add_option("--axis", sample_cfg.axis.literal,
                     "Axis coordinates (comma separated)")
      ->delimiter(',');
  sample->add_option("--axis-file", sample_cfg.axis.file,
                     "File with whitespace-separated axis coordinates");
  sample->add_option("--count", sample_cfg.count, "Number of samples")
      ->default_val(1);
  sample->add_option("--method", sample_cfg.method,
                     "Planar angle method: inverse|rejection|auto")
      ->default_val("auto");
  sample->add_option("--seed", sample_cfg.seed,
                     "Random seed (default: CAPSAMPLE_SEED or 0)");
  sample->add_option("--threads", sample_cfg.threads,
                     "Worker threads (each gets its own substream)")
      ->default_val(1);
  sample->add_option("--format", sample_cfg.format,
                     "Output format: table|records")
      ->default_val("table");
  sample->add_option("--out", sample_cfg.out, "Output file (default stdout)");

  CLI::App* cost = app.add_subcommand(
      "cost", "Closed-form rejection cost tables against dimension");
  cost->add_option("--kind", cost_cfg.kind,
                   "Cost model: rejection|planar|small-angle")
      ->default_val("rejection");
  cost->add_option("--theta", cost_cfg.thetas,
                   "Planar angles in radians (comma separated)")
      ->required()
      ->delimiter(',');
  cost->add_option("--dim-min", cost_cfg.dim_min, "Smallest dimension")
      ->default_val(2);
  cost->add_option("--dim-max", cost_cfg.dim_max, "Largest dimension")
      ->default_val(100);
  cost->add_option("--dim-step", cost_cfg.dim_step, "Dimension stride")
      ->default_val(1);
  cost->add_flag("--log10", cost_cfg.force_log10,
                 "Emit log10 of the cost instead of the linear value");
  cost->add_option("--out", cost_cfg.out, "Output file (default stdout)");

  CLI::App* validate = app.add_subcommand(
      "validate",
      "Compare sampled planar angles with the exact distribution");
  validate->add_option("--mode", validate_cfg.mode, "ks|histogram")
      ->default_val("ks");
  validate->add_option("--dim", validate_cfg.dimension, "Dimension n (>= 2)")
      ->required();
  validate->add_option("--theta0", validate_cfg.theta0,
                       "Cap planar angle in radians")
      ->required();
  validate->add_option("--count", validate_cfg.count, "Number of samples")
      ->default_val(10000);
  validate->add_option("--bins", validate_cfg.bins,
                       "Histogram bin count (histogram mode)")
      ->default_val(100);
  validate->add_option("--method", validate_cfg.method,
                       "Planar angle method: inverse|rejection|auto")
      ->default_val("auto");
  validate->add_option("--seed", validate_cfg.seed,
                       "Random seed (default: CAPSAMPLE_SEED or 0)");
  validate->add_option("--out", validate_cfg.out,
                       "Output file (default stdout)");

  CLI::App* baseline = app.add_subcommand(
      "baseline",
      "Re-weighting baselines compared with the direct cap sampler");
  baseline->add_option("--kind", baseline_cfg.kind,
                       "Baseline: shifted-sphere|normal")
      ->required();
  baseline->add_option("--dim", baseline_cfg.dimension, "Dimension n (>= 2)")
      ->required();
  baseline->add_option("--theta0", baseline_cfg.theta0,
                       "Cap planar angle in radians")
      ->required();
  baseline->add_option("--mu-norm", baseline_cfg.mu_norm,
                       "Norm of the shifted center mu")
      ->default_val(1.0);
  baseline->add_option("--sigma", baseline_cfg.sigma,
                       "Normal baseline standard deviation")
      ->default_val(0.08);
  baseline->add_option("--count", baseline_cfg.count,
                       "Number of (accepted) baseline samples")
      ->default_val(10000);
  baseline->add_option("--seed", baseline_cfg.seed,
                       "Random seed (default: CAPSAMPLE_SEED or 0)");
  baseline->add_option("--out", baseline_cfg.out,
                       "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (!sample->count("--seed")) sample_cfg.seed = default_seed();
    if (!validate->count("--seed")) validate_cfg.seed = default_seed();
    if (!baseline->count("--seed")) baseline_cfg.seed = default_seed();

    if (sample->parsed()) {
      run_sample(sample_cfg);
    } else if (cost->parsed()) {
      run_cost(cost_cfg);
    } else if (validate->parsed()) {
      run_validate(validate_cfg);
    } else if (baseline->parsed()) {
      run_baseline(baseline_cfg);
    }
  } catch (const capsample::underflow_error& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const capsample::numeric_error& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
