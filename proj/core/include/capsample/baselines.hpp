#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "capsample/geometry.hpp"
#include "capsample/random.hpp"

namespace capsample {

// A direction with an unnormalized importance weight proportional to
// 1/density; weights only ever enter weight-normalized statistics.
struct WeightedSample {
  Direction direction;
  double weight = 0.0;
};

// Cone sampled by drawing uniformly inside a sphere centered at mu and
// tangent to the cone boundary, then normalizing the position vector.
// The tangent construction requires 0 < theta0 < pi/2.
struct ShiftedSphereSpec {
  ShiftedSphereSpec(std::vector<double> mu_in, double theta0_in);

  std::vector<double> mu;
  double mu_norm = 0.0;
  double theta0 = 0.0;
  double radius = 0.0;  // |mu| * sin(theta0)
};

struct SphereBaselineDraw {
  Direction direction;
  double log_density = 0.0;  // log(r1^n - r2^n), unnormalized
  bool clamped = false;      // discriminant clamped to zero by rounding
};

SphereBaselineDraw shifted_sphere_sample(const ShiftedSphereSpec& spec,
                                         RandomStream& rng);

// Chord endpoints (r1, r2) of the ray through xhat against the shifted
// sphere; the sampling density at xhat is proportional to r1^n - r2^n.
std::pair<double, double> shifted_sphere_radii(const ShiftedSphereSpec& spec,
                                               const Direction& xhat);

// Cone sampled by normalizing draws from N(mu, sigma^2 I), rejecting
// directions outside the cap, and re-weighting by the known density.
struct ShiftedNormalSpec {
  ShiftedNormalSpec(std::vector<double> mu_in, double sigma_in,
                    double theta0_in);

  std::vector<double> mu;
  double mu_norm = 0.0;
  double sigma = 0.0;
  double theta0 = 0.0;
};

struct NormalBaselineDraw {
  Direction direction;
  double log_density = 0.0;  // log f(xhat) of the normalized-draw density
  bool accepted = false;
};

NormalBaselineDraw shifted_normal_sample(const ShiftedNormalSpec& spec,
                                         RandomStream& rng);

// log of the radial integral  integral_0^inf r^{n-1} phi((r - c)/sigma) dr
// with phi the standard normal density. Mode-centered 200-node
// Gauss-Legendre evaluated in the log domain.
double log_radial_moment(int n, double sigma, double c);

// A re-weighted batch: weights are exp(log_weight - max log_weight), so the
// largest weight is exactly 1 and everything stays finite.
struct BaselineBatch {
  std::vector<WeightedSample> samples;
  std::uint64_t attempts = 0;  // all draws, including rejected ones
  std::uint64_t clamped = 0;   // shifted-sphere discriminant clamps
  double log_weight_min = 0.0;
  double log_weight_max = 0.0;

  double acceptance_fraction() const;
};

BaselineBatch shifted_sphere_batch(const ShiftedSphereSpec& spec, int count,
                                   RandomStream& rng);
BaselineBatch shifted_normal_batch(const ShiftedNormalSpec& spec, int count,
                                   RandomStream& rng);

}  // namespace capsample
