#include "capsample/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "capsample/specfun.hpp"

namespace capsample {
namespace {

constexpr double kKsCritical1pct = 1.628;

double check_nonnegative_angle(double theta) {
  if (!(theta >= 0.0)) {
    throw std::domain_error("ThetaDistribution: theta must be >= 0");
  }
  return theta;
}

}  // namespace

ThetaDistribution::ThetaDistribution(int n, double theta0)
    : n_(n), theta0_(theta0), map_(n) {
  if (!(theta0 > 0.0 && theta0 <= std::numbers::pi)) {
    throw std::domain_error("ThetaDistribution: theta0 must lie in (0, pi]");
  }
  log_cap_fraction_ = map_.log_theta_to_fraction(theta0);
  log_area_ratio_ = specfun::log_gamma(0.5 * n) -
                    specfun::log_gamma(0.5 * (n - 1.0)) -
                    0.5 * std::log(std::numbers::pi);
}

double ThetaDistribution::cdf(double theta) const {
  check_nonnegative_angle(theta);
  if (theta >= theta0_) return 1.0;
  return std::exp(map_.log_theta_to_fraction(theta) - log_cap_fraction_);
}

double ThetaDistribution::pdf(double theta) const {
  check_nonnegative_angle(theta);
  if (theta > theta0_) return 0.0;
  double log_sin_power = 0.0;
  if (n_ > 2) {
    const double s = std::sin(theta);
    if (s == 0.0) return 0.0;
    log_sin_power = (n_ - 2.0) * std::log(s);
  }
  return std::exp(log_area_ratio_ + log_sin_power - log_cap_fraction_);
}

double ecdf(std::span<const double> samples, double theta) {
  if (samples.empty()) {
    throw std::domain_error("ecdf: sample list must be non-empty");
  }
  std::size_t hits = 0;
  for (double s : samples) {
    if (s <= theta) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(samples.size());
}

double weighted_ecdf(std::span<const double> samples,
                     std::span<const double> weights, double theta) {
  if (samples.size() != weights.size()) {
    throw std::invalid_argument("weighted_ecdf: size mismatch");
  }
  double total = 0.0;
  double below = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double w = weights[i];
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::domain_error("weighted_ecdf: weights must be >= 0 and finite");
    }
    total += w;
    if (samples[i] <= theta) below += w;
  }
  if (!(total > 0.0)) {
    throw std::domain_error("weighted_ecdf: at least one positive weight required");
  }
  return below / total;
}

KsReport ks_statistic(std::vector<double> samples,
                      const ThetaDistribution& exact) {
  if (samples.empty()) {
    throw std::domain_error("ks_statistic: sample list must be non-empty");
  }
  std::sort(samples.begin(), samples.end());
  const double count = static_cast<double>(samples.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double cdf = exact.cdf(samples[i]);
    const double step_above = (static_cast<double>(i) + 1.0) / count - cdf;
    const double step_below = cdf - static_cast<double>(i) / count;
    sup = std::max(sup, std::max(step_above, step_below));
  }
  return {samples.size(), sup, kKsCritical1pct / std::sqrt(count)};
}

KsReport ks_statistic_weighted(std::vector<double> samples,
                               std::vector<double> weights,
                               const ThetaDistribution& exact) {
  if (samples.empty()) {
    throw std::domain_error("ks_statistic_weighted: sample list must be non-empty");
  }
  if (samples.size() != weights.size()) {
    throw std::invalid_argument("ks_statistic_weighted: size mismatch");
  }
  std::vector<std::size_t> order(samples.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return samples[a] < samples[b]; });
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::domain_error(
          "ks_statistic_weighted: weights must be >= 0 and finite");
    }
    total += w;
  }
  if (!(total > 0.0)) {
    throw std::domain_error(
        "ks_statistic_weighted: at least one positive weight required");
  }
  double cumulative = 0.0;
  double sup = 0.0;
  for (std::size_t idx : order) {
    const double cdf = exact.cdf(samples[idx]);
    sup = std::max(sup, std::abs(cumulative / total - cdf));
    cumulative += weights[idx];
    sup = std::max(sup, std::abs(cumulative / total - cdf));
  }
  const double count = static_cast<double>(samples.size());
  return {samples.size(), sup, kKsCritical1pct / std::sqrt(count)};
}

std::vector<HistogramBin> histogram(std::span<const double> samples, int bins,
                                    double lo, double hi) {
  if (bins < 1) throw std::domain_error("histogram: bins must be >= 1");
  if (!(lo < hi)) throw std::domain_error("histogram: lo must be < hi");
  const double width = (hi - lo) / bins;
  std::vector<std::size_t> counts(static_cast<std::size_t>(bins), 0);
  for (double s : samples) {
    if (s < lo || s > hi) continue;
    auto idx = static_cast<std::size_t>((s - lo) / width);
    if (idx >= counts.size()) idx = counts.size() - 1;
    ++counts[idx];
  }
  std::vector<HistogramBin> result(counts.size());
  const double total = static_cast<double>(samples.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    result[i].left = lo + width * static_cast<double>(i);
    result[i].density =
        total > 0.0 ? static_cast<double>(counts[i]) / (total * width) : 0.0;
  }
  return result;
}

}  // namespace capsample
