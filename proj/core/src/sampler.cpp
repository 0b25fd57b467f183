#include "capsample/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "capsample/anglemap.hpp"
#include "capsample/errors.hpp"

namespace capsample {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr std::uint64_t kMaxRejectionTrials = 1000000000ULL;
constexpr double kDegenerateAxisTol = 1e-12;
// ln(1e-280): below this cap fraction kAuto switches to rejection sampling.
const double kAutoLogFractionFloor = std::log(1e-280);

void check_planar_args(double theta0, int n, const char* what) {
  if (n < 2) {
    throw std::domain_error(std::string(what) + ": dimension must be >= 2");
  }
  if (!(theta0 > 0.0 && theta0 <= kPi)) {
    throw std::domain_error(std::string(what) +
                            ": theta0 must lie in (0, pi]");
  }
}

double draw_planar_angle(double theta0, int n, AngleMethod method,
                         RandomStream& rng) {
  switch (method) {
    case AngleMethod::kInverse:
      return planar_angle_inverse(theta0, n, rng);
    case AngleMethod::kRejection:
      return planar_angle_rejection(theta0, n, rng);
    case AngleMethod::kAuto: {
      const AngleMap map(n);
      return map.log_theta_to_fraction(theta0) >= kAutoLogFractionFloor
                 ? planar_angle_inverse(theta0, n, rng)
                 : planar_angle_rejection(theta0, n, rng);
    }
  }
  throw std::domain_error("draw_planar_angle: unknown method");
}

// sin(theta) * (uniform point on S^{n-2}) extended with cos(theta) on the
// last axis, then rotated onto the requested axis.
Direction assemble_cap_point(double theta, const Direction& axis,
                             RandomStream& rng) {
  const std::size_t n = axis.coords().size();
  const Direction body = sphere_point(static_cast<int>(n) - 1, rng);
  std::vector<double> point(n);
  const double s = std::sin(theta);
  for (std::size_t i = 0; i + 1 < n; ++i) point[i] = s * body[i];
  point[n - 1] = std::cos(theta);
  return detail::unit_direction(rotate_from_nth_axis(point, axis));
}

}  // namespace

Direction sphere_point(int n, RandomStream& rng) {
  if (n < 1) {
    throw std::domain_error("sphere_point: dimension must be >= 1");
  }
  std::vector<double> z(static_cast<std::size_t>(n));
  double len = 0.0;
  do {
    double sq = 0.0;
    for (double& c : z) {
      c = rng.normal();
      sq += c * c;
    }
    len = std::sqrt(sq);
  } while (len == 0.0);
  for (double& c : z) c /= len;
  return detail::unit_direction(std::move(z));
}

double planar_angle_inverse(double theta0, int n, RandomStream& rng) {
  check_planar_args(theta0, n, "planar_angle_inverse");
  const AngleMap map(n);
  const double omega0 = map.theta_to_fraction(theta0);
  if (omega0 == 0.0) {
    throw underflow_error(
        "planar_angle_inverse: the cap's solid-angle fraction underflows to "
        "zero; use the rejection method instead");
  }
  const double theta = map.fraction_to_theta(rng.uniform() * omega0);
  return std::min(theta, theta0);
}

double planar_angle_rejection(double theta0, int n, RandomStream& rng,
                              std::uint64_t* trial_count) {
  check_planar_args(theta0, n, "planar_angle_rejection");
  if (n == 2) {
    // Exponent n-2 vanishes: every proposal is accepted.
    rng.uniform();
    if (trial_count) ++*trial_count;
    return rng.uniform() * theta0;
  }
  const double m = static_cast<double>(n - 2);
  const double ceiling = m * std::log(std::sin(std::min(theta0, kHalfPi)));
  for (std::uint64_t trial = 0; trial < kMaxRejectionTrials; ++trial) {
    const double u = rng.uniform();
    const double theta = rng.uniform() * theta0;
    if (trial_count) ++*trial_count;
    if (ceiling + std::log(u) < m * std::log(std::sin(theta))) {
      return theta;
    }
  }
  throw numeric_error(
      "planar_angle_rejection: no acceptance within 1e9 proposals");
}

Direction cap_point(const ConeSpec& spec, AngleMethod method,
                    RandomStream& rng) {
  if (spec.theta0 == 0.0) return spec.axis;  // degenerate cap
  const double theta =
      draw_planar_angle(spec.theta0, spec.axis.dimension(), method, rng);
  return assemble_cap_point(theta, spec.axis, rng);
}

Direction hollow_cone_point(const HollowConeSpec& spec, RandomStream& rng) {
  double theta = spec.theta1;
  if (spec.theta1 < spec.theta2) {
    const AngleMap map(spec.axis.dimension());
    const double omega1 = map.theta_to_fraction(spec.theta1);
    const double omega2 = map.theta_to_fraction(spec.theta2);
    const double width = omega2 - omega1;
    if (width <= 0.0) {
      throw underflow_error(
          "hollow_cone_point: the band's solid-angle width underflows to "
          "zero");
    }
    theta = map.fraction_to_theta(omega1 + rng.uniform() * width);
    theta = std::clamp(theta, spec.theta1, spec.theta2);
  }
  return assemble_cap_point(theta, spec.axis, rng);
}

std::vector<double> rotate_from_nth_axis(std::span<const double> x,
                                         const Direction& mu) {
  const std::size_t n = mu.coords().size();
  if (x.size() != n) {
    throw std::invalid_argument("rotate_from_nth_axis: dimension mismatch");
  }
  std::vector<double> y(x.begin(), x.end());
  const double mu_last = mu[n - 1];
  if (std::abs(mu_last) > 1.0 - kDegenerateAxisTol) {
    // The rotation plane is undefined; any orthogonal map taking the last
    // axis to mu preserves the cap law.
    if (mu_last < 0.0) y[n - 1] = -y[n - 1];
    return y;
  }
  const double s = std::sqrt((1.0 - mu_last) * (1.0 + mu_last));
  // In-plane coordinates of x: along e_n and along v = (mu - mu_n e_n)/s.
  double along_v = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) along_v += mu[i] * x[i];
  along_v /= s;
  const double along_last = x[n - 1];
  const double add_v = s * along_last + (mu_last - 1.0) * along_v;
  const double add_last = (mu_last - 1.0) * along_last - s * along_v;
  for (std::size_t i = 0; i + 1 < n; ++i) y[i] += (mu[i] / s) * add_v;
  y[n - 1] += add_last;
  return y;
}

}  // namespace capsample
