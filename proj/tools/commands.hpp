#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace capsample::cli {

// Where a run's axis comes from; the CLI keeps this around so the output
// header can identify the run exactly.
struct AxisConfig {
  int index_one_based = 0;        // > 0: canonical basis vector
  std::vector<double> literal;    // non-empty: explicit coordinates
  std::string file;               // non-empty: whitespace-separated file
};

struct SampleConfig {
  int dimension = 0;
  double theta0 = -1.0;
  double theta1 = -1.0;
  double theta2 = -1.0;
  double omega1 = -1.0;
  double omega2 = -1.0;
  AxisConfig axis;
  int count = 1;
  std::string method = "auto";
  std::uint64_t seed = 0;
  int threads = 1;
  std::string format = "table";
  std::string out;
};

struct CostConfig {
  std::string kind = "rejection";
  std::vector<double> thetas;
  int dim_min = 2;
  int dim_max = 100;
  int dim_step = 1;
  bool force_log10 = false;
  std::string out;
};

struct ValidateConfig {
  std::string mode = "ks";
  int dimension = 0;
  double theta0 = -1.0;
  int count = 10000;
  int bins = 100;
  std::string method = "auto";
  std::uint64_t seed = 0;
  std::string out;
};

struct BaselineConfig {
  std::string kind;
  int dimension = 0;
  double theta0 = -1.0;
  double mu_norm = 1.0;
  double sigma = 0.08;
  int count = 10000;
  std::uint64_t seed = 0;
  std::string out;
};

void run_sample(const SampleConfig& cfg);
void run_cost(const CostConfig& cfg);
void run_validate(const ValidateConfig& cfg);
void run_baseline(const BaselineConfig& cfg);

}  // namespace capsample::cli
