#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "capsample/anglemap.hpp"
#include "capsample/baselines.hpp"
#include "capsample/errors.hpp"
#include "capsample/geometry.hpp"
#include "capsample/random.hpp"
#include "capsample/sampler.hpp"
#include "capsample/stats.hpp"
#include "capsample/version.hpp"

namespace capsample::cli {
namespace {

constexpr double kPi = std::numbers::pi;

// 17 significant digits: enough to reconstruct any double exactly.
std::string fmt17(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

// Output sink: stdout by default, a file when --out is given.
class Writer {
 public:
  explicit Writer(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) {
        throw std::invalid_argument("cannot open output file: " + path);
      }
    }
  }

  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  void header(const std::string& key, const std::string& value) {
    stream() << "# " << key << ": " << value << "\n";
  }

  void line(const std::string& text) { stream() << text << "\n"; }

 private:
  std::ofstream file_;
};

void write_preamble(Writer& out, const std::string& command) {
  out.header("capsample", kVersion);
  out.header("command", command);
}

Direction resolve_axis(const AxisConfig& cfg, int dimension) {
  int sources = 0;
  if (cfg.index_one_based > 0) ++sources;
  if (!cfg.literal.empty()) ++sources;
  if (!cfg.file.empty()) ++sources;
  if (sources > 1) {
    throw std::invalid_argument(
        "at most one of --axis-index, --axis, --axis-file may be given");
  }
  if (cfg.index_one_based > 0) {
    if (cfg.index_one_based > dimension) {
      throw std::invalid_argument("--axis-index exceeds the dimension");
    }
    return Direction::canonical_axis(dimension, cfg.index_one_based - 1);
  }
  if (!cfg.literal.empty()) {
    if (static_cast<int>(cfg.literal.size()) != dimension) {
      throw std::invalid_argument("--axis coordinate count must equal --dim");
    }
    return Direction::from_coords(cfg.literal);
  }
  if (!cfg.file.empty()) {
    std::ifstream in(cfg.file);
    if (!in) throw std::invalid_argument("cannot open axis file: " + cfg.file);
    std::vector<double> coords;
    double value = 0.0;
    while (in >> value) coords.push_back(value);
    if (static_cast<int>(coords.size()) != dimension) {
      throw std::invalid_argument("axis file entry count must equal --dim");
    }
    return Direction::from_coords(std::move(coords));
  }
  return Direction::canonical_axis(dimension, dimension - 1);  // e_n
}

std::string axis_description(const AxisConfig& cfg, int dimension) {
  if (cfg.index_one_based > 0) {
    return "canonical " + std::to_string(cfg.index_one_based);
  }
  if (!cfg.literal.empty()) return "literal";
  if (!cfg.file.empty()) return "file " + cfg.file;
  return "canonical " + std::to_string(dimension);
}

AngleMethod parse_method(const std::string& name) {
  if (name == "inverse") return AngleMethod::kInverse;
  if (name == "rejection") return AngleMethod::kRejection;
  if (name == "auto") return AngleMethod::kAuto;
  throw std::invalid_argument("unknown method: " + name);
}

// Log-spaced checkpoint schedule 10, 20, 50, 100, ... capped at count.
std::vector<int> checkpoint_schedule(int count) {
  std::vector<int> schedule;
  for (int decade = 10; decade <= count; decade *= 10) {
    for (int mult : {1, 2, 5}) {
      const int value = decade * mult;
      if (value <= count) schedule.push_back(value);
    }
  }
  if (schedule.empty() || schedule.back() != count) schedule.push_back(count);
  return schedule;
}

std::string row_table(const std::vector<double>& coords) {
  std::string row;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) row += ' ';
    row += fmt17(coords[i]);
  }
  return row;
}

std::string row_record(int index, const std::vector<double>& coords) {
  nlohmann::json record;
  record["index"] = index;
  record["coords"] = coords;
  return record.dump();
}

struct Region {
  bool hollow = false;
  double theta0 = 0.0;  // cap
  double theta1 = 0.0;  // hollow
  double theta2 = 0.0;
};

Region resolve_region(const SampleConfig& cfg) {
  const bool has_cap = cfg.theta0 >= 0.0;
  const bool has_thetas = cfg.theta1 >= 0.0 || cfg.theta2 >= 0.0;
  const bool has_omegas = cfg.omega1 >= 0.0 || cfg.omega2 >= 0.0;
  if (has_cap + has_thetas + has_omegas != 1) {
    throw std::invalid_argument(
        "exactly one region is required: --theta0, --theta1/--theta2, or "
        "--omega1/--omega2");
  }
  Region region;
  if (has_cap) {
    region.theta0 = cfg.theta0;
    return region;
  }
  region.hollow = true;
  if (has_thetas) {
    if (cfg.theta1 < 0.0 || cfg.theta2 < 0.0) {
      throw std::invalid_argument("--theta1 and --theta2 must both be given");
    }
    region.theta1 = cfg.theta1;
    region.theta2 = cfg.theta2;
    return region;
  }
  if (cfg.omega1 < 0.0 || cfg.omega2 < 0.0) {
    throw std::invalid_argument("--omega1 and --omega2 must both be given");
  }
  if (cfg.omega1 > 1.0 || cfg.omega2 > 1.0 || cfg.omega1 > cfg.omega2) {
    throw std::invalid_argument(
        "--omega1/--omega2 must satisfy 0 <= omega1 <= omega2 <= 1");
  }
  const AngleMap map(cfg.dimension);
  region.theta1 = map.fraction_to_theta(cfg.omega1);
  region.theta2 = map.fraction_to_theta(cfg.omega2);
  return region;
}

}  // namespace

void run_sample(const SampleConfig& cfg) {
  if (cfg.dimension < 2) throw std::invalid_argument("--dim must be >= 2");
  if (cfg.count < 1) throw std::invalid_argument("--count must be >= 1");
  if (cfg.threads < 1) throw std::invalid_argument("--threads must be >= 1");
  if (cfg.format != "table" && cfg.format != "records") {
    throw std::invalid_argument("--format must be table or records");
  }
  const Region region = resolve_region(cfg);
  const Direction axis = resolve_axis(cfg.axis, cfg.dimension);
  const AngleMethod method = parse_method(cfg.method);

  Writer out(cfg.out);
  write_preamble(out, "sample");
  out.header("dimension", std::to_string(cfg.dimension));
  if (region.hollow) {
    out.header("region", "hollow theta1=" + fmt17(region.theta1) +
                             " theta2=" + fmt17(region.theta2));
  } else {
    out.header("region", "cap theta0=" + fmt17(region.theta0));
  }
  out.header("axis", axis_description(cfg.axis, cfg.dimension));
  out.header("method", cfg.method);
  out.header("count", std::to_string(cfg.count));
  out.header("seed", std::to_string(cfg.seed));
  out.header("threads", std::to_string(cfg.threads));
  out.header("format", cfg.format);

  const auto generate_chunk = [&](int first, int last, RandomStream rng,
                                  std::string& sink) {
    std::ostringstream buffer;
    for (int i = first; i < last; ++i) {
      const Direction point =
          region.hollow
              ? hollow_cone_point(
                    HollowConeSpec(axis, region.theta1, region.theta2), rng)
              : cap_point(ConeSpec(axis, region.theta0), method, rng);
      buffer << (cfg.format == "table" ? row_table(point.coords())
                                       : row_record(i, point.coords()))
             << "\n";
    }
    sink = buffer.str();
  };

  std::vector<std::string> chunks(cfg.threads);
  if (cfg.threads == 1) {
    generate_chunk(0, cfg.count, RandomStream(cfg.seed), chunks[0]);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(cfg.threads);
    for (int w = 0; w < cfg.threads; ++w) {
      const int first = static_cast<int>(
          static_cast<std::int64_t>(cfg.count) * w / cfg.threads);
      const int last = static_cast<int>(
          static_cast<std::int64_t>(cfg.count) * (w + 1) / cfg.threads);
      workers.emplace_back(generate_chunk, first, last,
                           RandomStream::substream(cfg.seed, w),
                           std::ref(chunks[w]));
    }
    for (auto& worker : workers) worker.join();
  }
  for (const auto& chunk : chunks) out.stream() << chunk;
  out.stream().flush();
}

void run_cost(const CostConfig& cfg) {
  if (cfg.thetas.empty()) throw std::invalid_argument("--theta is required");
  if (cfg.dim_min < 2 || cfg.dim_max < cfg.dim_min || cfg.dim_step < 1) {
    throw std::invalid_argument("invalid dimension range");
  }
  if (cfg.kind != "rejection" && cfg.kind != "planar" &&
      cfg.kind != "small-angle") {
    throw std::invalid_argument(
        "--kind must be rejection, planar, or small-angle");
  }

  Writer out(cfg.out);
  write_preamble(out, "cost");
  out.header("kind", cfg.kind);
  out.header("dimensions", std::to_string(cfg.dim_min) + ".." +
                               std::to_string(cfg.dim_max) + " step " +
                               std::to_string(cfg.dim_step));

  bool first_block = true;
  for (double theta : cfg.thetas) {
    std::vector<std::pair<int, CostEstimate>> rows;
    for (int n = cfg.dim_min; n <= cfg.dim_max; n += cfg.dim_step) {
      const AngleMap map(n);
      if (cfg.kind == "rejection") {
        rows.emplace_back(n, map.rejection_cost(theta));
      } else if (cfg.kind == "planar") {
        rows.emplace_back(n, map.planar_rejection_cost(theta));
      } else {
        rows.emplace_back(n, map.rejection_cost_small_angle(theta));
      }
    }
    const bool overflowed =
        std::any_of(rows.begin(), rows.end(),
                    [](const auto& row) { return !row.second.value; });
    const bool use_log10 = cfg.force_log10 || overflowed;
    if (!first_block) out.line("");
    first_block = false;
    out.header("theta", fmt17(theta));
    out.header("columns", use_log10 ? "n log10_cost" : "n cost");
    if (overflowed && !cfg.force_log10) {
      out.header("note", "linear cost overflows double; column switched to log10");
    }
    for (const auto& [n, cost] : rows) {
      out.line(std::to_string(n) + " " +
               fmt17(use_log10 ? cost.log10_value : *cost.value));
    }
  }
  out.stream().flush();
}

void run_validate(const ValidateConfig& cfg) {
  if (cfg.dimension < 2) throw std::invalid_argument("--dim must be >= 2");
  if (!(cfg.theta0 > 0.0 && cfg.theta0 <= kPi)) {
    throw std::invalid_argument("--theta0 must lie in (0, pi]");
  }
  if (cfg.count < 10) throw std::invalid_argument("--count must be >= 10");
  if (cfg.mode != "ks" && cfg.mode != "histogram") {
    throw std::invalid_argument("--mode must be ks or histogram");
  }
  const AngleMethod method = parse_method(cfg.method);
  const Direction axis =
      Direction::canonical_axis(cfg.dimension, cfg.dimension - 1);
  const ConeSpec spec(axis, cfg.theta0);
  const ThetaDistribution exact(cfg.dimension, cfg.theta0);

  RandomStream rng(cfg.seed);
  std::vector<double> angles(static_cast<std::size_t>(cfg.count));
  for (double& angle : angles) {
    const Direction point = cap_point(spec, method, rng);
    angle = std::acos(std::clamp(point.dot(axis), -1.0, 1.0));
  }

  Writer out(cfg.out);
  write_preamble(out, "validate");
  out.header("mode", cfg.mode);
  out.header("dimension", std::to_string(cfg.dimension));
  out.header("theta0", fmt17(cfg.theta0));
  out.header("method", cfg.method);
  out.header("count", std::to_string(cfg.count));
  out.header("seed", std::to_string(cfg.seed));

  if (cfg.mode == "ks") {
    out.header("critical_1pct", "1.628/sqrt(N)");
    out.header("columns", "N D_N");
    for (int checkpoint : checkpoint_schedule(cfg.count)) {
      const std::vector<double> prefix(angles.begin(),
                                       angles.begin() + checkpoint);
      const KsReport report = ks_statistic(prefix, exact);
      out.line(std::to_string(checkpoint) + " " + fmt17(report.statistic));
    }
  } else {
    if (cfg.bins < 1) throw std::invalid_argument("--bins must be >= 1");
    out.header("bins", std::to_string(cfg.bins));
    out.header("columns",
               "bin_left density exact_density(at bin center)");
    const auto bins = histogram(angles, cfg.bins, 0.0, cfg.theta0);
    const double width = cfg.theta0 / cfg.bins;
    for (const auto& bin : bins) {
      out.line(fmt17(bin.left) + " " + fmt17(bin.density) + " " +
               fmt17(exact.pdf(bin.left + 0.5 * width)));
    }
  }
  out.stream().flush();
}

void run_baseline(const BaselineConfig& cfg) {
  if (cfg.kind != "shifted-sphere" && cfg.kind != "normal") {
    throw std::invalid_argument("--kind must be shifted-sphere or normal");
  }
  if (cfg.dimension < 2) throw std::invalid_argument("--dim must be >= 2");
  if (cfg.count < 10) throw std::invalid_argument("--count must be >= 10");
  if (!(cfg.theta0 > 0.0)) {
    throw std::invalid_argument("--theta0 must be positive");
  }

  std::vector<double> mu(static_cast<std::size_t>(cfg.dimension), 0.0);
  mu.back() = cfg.mu_norm;
  const Direction axis =
      Direction::canonical_axis(cfg.dimension, cfg.dimension - 1);
  const ThetaDistribution exact(cfg.dimension, cfg.theta0);

  // worker 0: baseline draws; worker 1: proposed-method reference draws
  RandomStream baseline_rng = RandomStream::substream(cfg.seed, 0);
  RandomStream proposed_rng = RandomStream::substream(cfg.seed, 1);

  BaselineBatch batch;
  if (cfg.kind == "shifted-sphere") {
    const ShiftedSphereSpec spec(mu, cfg.theta0);
    batch = shifted_sphere_batch(spec, cfg.count, baseline_rng);
  } else {
    const ShiftedNormalSpec spec(mu, cfg.sigma, cfg.theta0);
    batch = shifted_normal_batch(spec, cfg.count, baseline_rng);
  }
  std::vector<double> baseline_angles;
  std::vector<double> baseline_weights;
  baseline_angles.reserve(batch.samples.size());
  baseline_weights.reserve(batch.samples.size());
  for (const auto& ws : batch.samples) {
    baseline_angles.push_back(
        std::acos(std::clamp(ws.direction.dot(axis), -1.0, 1.0)));
    baseline_weights.push_back(ws.weight);
  }

  const ConeSpec proposed_spec(axis, cfg.theta0);
  std::vector<double> proposed_angles(batch.samples.size());
  for (double& angle : proposed_angles) {
    const Direction point =
        cap_point(proposed_spec, AngleMethod::kAuto, proposed_rng);
    angle = std::acos(std::clamp(point.dot(axis), -1.0, 1.0));
  }

  Writer out(cfg.out);
  write_preamble(out, "baseline");
  out.header("kind", cfg.kind);
  out.header("dimension", std::to_string(cfg.dimension));
  out.header("theta0", fmt17(cfg.theta0));
  out.header("mu_norm", fmt17(cfg.mu_norm));
  if (cfg.kind == "normal") {
    out.header("sigma", fmt17(cfg.sigma));
    out.header("acceptance_fraction", fmt17(batch.acceptance_fraction()));
  }
  if (batch.clamped > 0) {
    out.header("discriminant_clamps", std::to_string(batch.clamped));
  }
  out.header("log_weight_range", fmt17(batch.log_weight_min) + " " +
                                     fmt17(batch.log_weight_max));
  out.header("count", std::to_string(cfg.count));
  out.header("seed", std::to_string(cfg.seed));
  out.header("columns", "N D_N_baseline D_N_proposed");

  for (int checkpoint : checkpoint_schedule(cfg.count)) {
    const std::vector<double> base_angles(
        baseline_angles.begin(), baseline_angles.begin() + checkpoint);
    const std::vector<double> base_weights(
        baseline_weights.begin(), baseline_weights.begin() + checkpoint);
    const std::vector<double> prop_angles(
        proposed_angles.begin(), proposed_angles.begin() + checkpoint);
    const KsReport base = ks_statistic_weighted(base_angles, base_weights, exact);
    const KsReport prop = ks_statistic(prop_angles, exact);
    out.line(std::to_string(checkpoint) + " " + fmt17(base.statistic) + " " +
             fmt17(prop.statistic));
  }
  out.stream().flush();
}

}  // namespace capsample::cli
