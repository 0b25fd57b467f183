#pragma once

#include <optional>

#include "capsample/specfun.hpp"

namespace capsample {

// Expected number of proposals for a rejection scheme. The linear value is
// absent whenever it is not representable as a double; log10_value is always
// valid.
struct CostEstimate {
  double log10_value = 0.0;
  std::optional<double> value;
};

// Map between the planar cross-sectional angle theta of a spherical cap and
// the fraction of the sphere's surface the cap subtends, for a fixed
// dimension n >= 2. Also evaluates the closed-form cost models of the
// rejection schemes built on this geometry.
//
// Immutable after construction; all members are pure and thread-safe.
class AngleMap {
 public:
  explicit AngleMap(int n);

  int dimension() const { return n_; }

  // Solid-angle fraction subtended by a cap of planar angle theta in [0, pi].
  double theta_to_fraction(double theta) const;

  // Natural log of theta_to_fraction; finite and accurate where the linear
  // fraction underflows.
  double log_theta_to_fraction(double theta) const;

  // Natural log of 1 - theta_to_fraction(theta); the stable complement for
  // theta near pi.
  double log_complement_fraction(double theta) const;

  // Planar angle of the cap subtending solid-angle fraction omega in [0, 1].
  double fraction_to_theta(double omega) const;

  // Expected full-sphere draws per draw landing in a cap of angle
  // theta in (0, pi].
  CostEstimate rejection_cost(double theta) const;

  // Small-angle closed-form approximation of rejection_cost, valid for
  // 0 < theta <= 1.
  CostEstimate rejection_cost_small_angle(double theta) const;

  // Expected proposals per accepted angle for the one-dimensional
  // planar-angle rejection scheme with cap angle theta0 in (0, pi].
  CostEstimate planar_rejection_cost(double theta0) const;

 private:
  int n_;
  specfun::BetaParams half_params_;  // ((n-1)/2, 1/2)
};

}  // namespace capsample
