#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "capsample/anglemap.hpp"

namespace capsample {

// Exact distribution of the planar angle between a uniform cap sample and
// the cap axis, for dimension n and cap angle theta0 in (0, pi].
class ThetaDistribution {
 public:
  ThetaDistribution(int n, double theta0);

  int dimension() const { return n_; }
  double theta0() const { return theta0_; }

  // F(theta): the cap fraction up to theta, normalized to the cap; 1 beyond
  // theta0.
  double cdf(double theta) const;

  // f(theta) proportional to sin^{n-2} on [0, theta0], zero beyond.
  // Evaluated in the log domain so large n stays finite.
  double pdf(double theta) const;

 private:
  int n_;
  double theta0_;
  AngleMap map_;
  double log_cap_fraction_;
  double log_area_ratio_;  // log(s_{n-1} / s_n)
};

// One-sample Kolmogorov-Smirnov result. The critical value is the 1%
// asymptotic threshold 1.628 / sqrt(N).
struct KsReport {
  std::size_t sample_count = 0;
  double statistic = 0.0;
  double critical_value_1pct = 0.0;

  bool below_critical() const { return statistic < critical_value_1pct; }
};

// Empirical CDF of the samples at theta.
double ecdf(std::span<const double> samples, double theta);

// Weight-normalized empirical CDF; requires at least one positive weight.
double weighted_ecdf(std::span<const double> samples,
                     std::span<const double> weights, double theta);

// KS statistic of the samples against the exact cap distribution. Input is
// sorted internally.
KsReport ks_statistic(std::vector<double> samples,
                      const ThetaDistribution& exact);

// KS statistic of the weighted empirical CDF against the exact cap
// distribution.
KsReport ks_statistic_weighted(std::vector<double> samples,
                               std::vector<double> weights,
                               const ThetaDistribution& exact);

struct HistogramBin {
  double left = 0.0;
  double density = 0.0;
};

// Density-normalized histogram over [lo, hi): bin areas sum to the fraction
// of samples inside the range. Samples equal to hi land in the last bin.
std::vector<HistogramBin> histogram(std::span<const double> samples, int bins,
                                    double lo, double hi);

}  // namespace capsample
