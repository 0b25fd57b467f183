#include "capsample/anglemap.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace capsample {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

int check_dimension(int n) {
  if (n < 2) throw std::domain_error("AngleMap: dimension must be >= 2");
  return n;
}

CostEstimate cost_from_log(double ln_cost) {
  CostEstimate c;
  c.log10_value = ln_cost / std::numbers::ln10;
  if (ln_cost < std::log(std::numeric_limits<double>::max())) {
    c.value = std::exp(ln_cost);
  }
  return c;
}

double check_angle(double theta, const char* what) {
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw std::domain_error(std::string(what) + " must lie in [0, pi]");
  }
  return theta;
}

}  // namespace

AngleMap::AngleMap(int n)
    : n_(check_dimension(n)), half_params_(0.5 * (n - 1.0), 0.5) {}

double AngleMap::theta_to_fraction(double theta) const {
  check_angle(theta, "theta_to_fraction: theta");
  const double s = std::sin(theta);
  const double incomplete = specfun::reg_inc_beta(s * s, half_params_);
  // theta == pi/2 deliberately falls into the first case; both agree there.
  return theta <= kHalfPi ? 0.5 * incomplete : 1.0 - 0.5 * incomplete;
}

double AngleMap::log_theta_to_fraction(double theta) const {
  check_angle(theta, "log_theta_to_fraction: theta");
  const double s = std::sin(theta);
  if (theta <= kHalfPi) {
    return specfun::log_reg_inc_beta(s * s, half_params_) - std::numbers::ln2;
  }
  const double incomplete = specfun::reg_inc_beta(s * s, half_params_);
  return std::log1p(-0.5 * incomplete);
}

double AngleMap::log_complement_fraction(double theta) const {
  check_angle(theta, "log_complement_fraction: theta");
  const double s = std::sin(theta);
  if (theta <= kHalfPi) {
    const double incomplete = specfun::reg_inc_beta(s * s, half_params_);
    return std::log1p(-0.5 * incomplete);
  }
  return specfun::log_reg_inc_beta(s * s, half_params_) - std::numbers::ln2;
}

double AngleMap::fraction_to_theta(double omega) const {
  if (!(omega >= 0.0 && omega <= 1.0)) {
    throw std::domain_error("fraction_to_theta: omega must lie in [0, 1]");
  }
  if (omega <= 0.5) {
    const double x = specfun::inv_reg_inc_beta(2.0 * omega, half_params_);
    return std::asin(std::sqrt(x));
  }
  const double x = specfun::inv_reg_inc_beta(2.0 * (1.0 - omega), half_params_);
  return kPi - std::asin(std::sqrt(x));
}

CostEstimate AngleMap::rejection_cost(double theta) const {
  if (!(theta > 0.0 && theta <= kPi)) {
    throw std::domain_error("rejection_cost: theta must lie in (0, pi]");
  }
  return cost_from_log(-log_theta_to_fraction(theta));
}

CostEstimate AngleMap::rejection_cost_small_angle(double theta) const {
  if (!(theta > 0.0 && theta <= 1.0)) {
    throw std::domain_error(
        "rejection_cost_small_angle: theta must lie in (0, 1]");
  }
  const double m = n_ - 1.0;
  const double ln_cost =
      0.5 * std::log(2.0 * kPi * std::numbers::e * m) - m * std::log(theta);
  return cost_from_log(ln_cost);
}

CostEstimate AngleMap::planar_rejection_cost(double theta0) const {
  if (!(theta0 > 0.0 && theta0 <= kPi)) {
    throw std::domain_error("planar_rejection_cost: theta0 must lie in (0, pi]");
  }
  const double sin_peak = std::sin(std::min(theta0, kHalfPi));
  const double ln_cost = -0.5 * std::log(kPi) +
                         specfun::log_gamma(0.5 * n_) -
                         specfun::log_gamma(0.5 * (n_ - 1.0)) +
                         std::log(theta0) + (n_ - 2.0) * std::log(sin_peak) -
                         log_theta_to_fraction(theta0);
  return cost_from_log(ln_cost);
}

}  // namespace capsample
