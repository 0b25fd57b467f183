#include "capsample/baselines.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "capsample/errors.hpp"
#include "capsample/sampler.hpp"

namespace capsample {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kMaxBatchAttempts = 1000000000ULL;
constexpr int kQuadratureOrder = 200;

double vector_norm(const std::vector<double>& v) {
  double sq = 0.0;
  for (double c : v) sq += c * c;
  return std::sqrt(sq);
}

// Gauss-Legendre nodes and weights on [-1, 1], computed once by Newton
// iteration on the Legendre polynomial.
struct GaussLegendreRule {
  std::array<double, kQuadratureOrder> nodes{};
  std::array<double, kQuadratureOrder> weights{};

  GaussLegendreRule() {
    const int order = kQuadratureOrder;
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
      double root = std::cos(kPi * (i + 0.75) / (order + 0.5));
      double derivative = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0;
        double p1 = 0.0;
        for (int j = 0; j < order; ++j) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j + 1.0) * root * p1 - j * p2) / (j + 1.0);
        }
        derivative = order * (root * p0 - p1) / (root * root - 1.0);
        const double step = p0 / derivative;
        root -= step;
        if (std::abs(step) < 1e-15) break;
      }
      nodes[i] = -root;
      nodes[order - 1 - i] = root;
      const double w = 2.0 / ((1.0 - root * root) * derivative * derivative);
      weights[i] = w;
      weights[order - 1 - i] = w;
    }
  }
};

const GaussLegendreRule& quadrature_rule() {
  static const GaussLegendreRule rule;
  return rule;
}

double log_sphere_chord_density(const ShiftedSphereSpec& spec, double r1,
                                double r2) {
  // log(r1^n - r2^n) = n log r1 + log(1 - (r2/r1)^n)
  const auto n = static_cast<double>(spec.mu.size());
  const double lead = n * std::log(r1);
  if (r2 <= 0.0) return lead;
  double ratio_pow = std::exp(n * (std::log(r2) - std::log(r1)));
  if (ratio_pow >= 1.0) ratio_pow = 1.0 - 1e-16;  // tangent ray, keep finite
  return lead + std::log1p(-ratio_pow);
}

}  // namespace

ShiftedSphereSpec::ShiftedSphereSpec(std::vector<double> mu_in,
                                     double theta0_in)
    : mu(std::move(mu_in)), theta0(theta0_in) {
  if (mu.size() < 2) {
    throw std::domain_error("ShiftedSphereSpec: dimension must be >= 2");
  }
  mu_norm = vector_norm(mu);
  if (!(mu_norm > 0.0)) {
    throw std::domain_error("ShiftedSphereSpec: mu must be non-zero");
  }
  if (!(theta0 > 0.0 && theta0 < 0.5 * kPi)) {
    throw std::domain_error(
        "ShiftedSphereSpec: theta0 must lie in (0, pi/2) for the tangent "
        "construction");
  }
  radius = mu_norm * std::sin(theta0);
}

std::pair<double, double> shifted_sphere_radii(const ShiftedSphereSpec& spec,
                                               const Direction& xhat) {
  const double along = xhat.dot(spec.mu);
  double disc = along * along - spec.mu_norm * spec.mu_norm +
                spec.radius * spec.radius;
  if (disc < 0.0) disc = 0.0;
  const double root = std::sqrt(disc);
  return {along + root, along - root};
}

SphereBaselineDraw shifted_sphere_sample(const ShiftedSphereSpec& spec,
                                         RandomStream& rng) {
  const auto n = static_cast<int>(spec.mu.size());
  const Direction ball_dir = sphere_point(n, rng);
  // uniform in the ball: uniform direction scaled by U^{1/n}
  const double r = spec.radius * std::pow(rng.uniform(), 1.0 / n);
  std::vector<double> position(spec.mu.size());
  double sq = 0.0;
  for (std::size_t i = 0; i < position.size(); ++i) {
    position[i] = r * ball_dir[i] + spec.mu[i];
    sq += position[i] * position[i];
  }
  const double len = std::sqrt(sq);
  for (double& c : position) c /= len;
  Direction xhat = detail::unit_direction(std::move(position));

  const double along = xhat.dot(spec.mu);
  const double disc_raw = along * along - spec.mu_norm * spec.mu_norm +
                          spec.radius * spec.radius;
  const bool clamped = disc_raw < 0.0;
  const auto [r1, r2] = shifted_sphere_radii(spec, xhat);
  const double log_density = log_sphere_chord_density(spec, r1, r2);
  return {std::move(xhat), log_density, clamped};
}

ShiftedNormalSpec::ShiftedNormalSpec(std::vector<double> mu_in,
                                     double sigma_in, double theta0_in)
    : mu(std::move(mu_in)), sigma(sigma_in), theta0(theta0_in) {
  if (mu.size() < 2) {
    throw std::domain_error("ShiftedNormalSpec: dimension must be >= 2");
  }
  mu_norm = vector_norm(mu);
  if (!(mu_norm > 0.0)) {
    throw std::domain_error("ShiftedNormalSpec: mu must be non-zero");
  }
  if (!(sigma > 0.0)) {
    throw std::domain_error("ShiftedNormalSpec: sigma must be positive");
  }
  if (!(theta0 > 0.0 && theta0 < kPi)) {
    throw std::domain_error("ShiftedNormalSpec: theta0 must lie in (0, pi)");
  }
}

double log_radial_moment(int n, double sigma, double c) {
  if (n < 2) {
    throw std::domain_error("log_radial_moment: dimension must be >= 2");
  }
  if (!(sigma > 0.0)) {
    throw std::domain_error("log_radial_moment: sigma must be positive");
  }
  const double nm1 = n - 1.0;
  const double mode = 0.5 * (c + std::sqrt(c * c + 4.0 * nm1 * sigma * sigma));
  const double width =
      sigma / std::sqrt(1.0 + nm1 * sigma * sigma / (mode * mode));
  const double lo = std::max(0.0, mode - 12.0 * width);
  const double hi = mode + 12.0 * width;

  const auto log_integrand = [&](double r) {
    const double z = (r - c) / sigma;
    return nm1 * std::log(r) - 0.5 * z * z;
  };
  const double peak = log_integrand(mode);

  const GaussLegendreRule& rule = quadrature_rule();
  const double mid = 0.5 * (hi + lo);
  const double halfspan = 0.5 * (hi - lo);
  double acc = 0.0;
  for (int i = 0; i < kQuadratureOrder; ++i) {
    const double r = mid + halfspan * rule.nodes[i];
    acc += rule.weights[i] * std::exp(log_integrand(r) - peak);
  }
  // divide by sqrt(2 pi) for the normal density in the integrand
  return peak + std::log(acc * halfspan) - 0.5 * std::log(2.0 * kPi);
}

NormalBaselineDraw shifted_normal_sample(const ShiftedNormalSpec& spec,
                                         RandomStream& rng) {
  const auto n = static_cast<int>(spec.mu.size());
  std::vector<double> position(spec.mu.size());
  double sq = 0.0;
  for (std::size_t i = 0; i < position.size(); ++i) {
    position[i] = spec.mu[i] + spec.sigma * rng.normal();
    sq += position[i] * position[i];
  }
  const double len = std::sqrt(sq);
  for (double& coord : position) coord /= len;
  Direction xhat = detail::unit_direction(std::move(position));

  const double along = xhat.dot(spec.mu);
  const bool accepted = along >= spec.mu_norm * std::cos(spec.theta0);

  const double perp_sq =
      std::max(0.0, spec.mu_norm * spec.mu_norm - along * along);
  const double log_density =
      -0.5 * perp_sq / (spec.sigma * spec.sigma) -
      0.5 * std::log(2.0 * kPi) - n * std::log(spec.sigma) -
      (0.5 * n - 1.0) * std::log(2.0 * kPi) +
      log_radial_moment(n, spec.sigma, along);
  return {std::move(xhat), log_density, accepted};
}

double BaselineBatch::acceptance_fraction() const {
  if (attempts == 0) return 0.0;
  return static_cast<double>(samples.size()) / static_cast<double>(attempts);
}

namespace {

BaselineBatch finalize_batch(std::vector<Direction> directions,
                             std::vector<double> log_weights,
                             std::uint64_t attempts, std::uint64_t clamped) {
  BaselineBatch batch;
  batch.attempts = attempts;
  batch.clamped = clamped;
  batch.log_weight_min = *std::min_element(log_weights.begin(), log_weights.end());
  batch.log_weight_max = *std::max_element(log_weights.begin(), log_weights.end());
  batch.samples.reserve(directions.size());
  for (std::size_t i = 0; i < directions.size(); ++i) {
    batch.samples.push_back({std::move(directions[i]),
                             std::exp(log_weights[i] - batch.log_weight_max)});
  }
  return batch;
}

}  // namespace

BaselineBatch shifted_sphere_batch(const ShiftedSphereSpec& spec, int count,
                                   RandomStream& rng) {
  if (count < 1) throw std::domain_error("shifted_sphere_batch: count must be >= 1");
  std::vector<Direction> directions;
  std::vector<double> log_weights;
  directions.reserve(count);
  log_weights.reserve(count);
  std::uint64_t clamped = 0;
  for (int i = 0; i < count; ++i) {
    SphereBaselineDraw draw = shifted_sphere_sample(spec, rng);
    if (draw.clamped) ++clamped;
    log_weights.push_back(-draw.log_density);
    directions.push_back(std::move(draw.direction));
  }
  return finalize_batch(std::move(directions), std::move(log_weights),
                        static_cast<std::uint64_t>(count), clamped);
}

BaselineBatch shifted_normal_batch(const ShiftedNormalSpec& spec, int count,
                                   RandomStream& rng) {
  if (count < 1) throw std::domain_error("shifted_normal_batch: count must be >= 1");
  std::vector<Direction> directions;
  std::vector<double> log_weights;
  directions.reserve(count);
  log_weights.reserve(count);
  std::uint64_t attempts = 0;
  while (static_cast<int>(directions.size()) < count) {
    if (attempts >= kMaxBatchAttempts) {
      throw numeric_error(
          "shifted_normal_batch: acceptance too low, attempt cap reached");
    }
    ++attempts;
    NormalBaselineDraw draw = shifted_normal_sample(spec, rng);
    if (!draw.accepted) continue;
    log_weights.push_back(-draw.log_density);
    directions.push_back(std::move(draw.direction));
  }
  return finalize_batch(std::move(directions), std::move(log_weights),
                        attempts, 0);
}

}  // namespace capsample
