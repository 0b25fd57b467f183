#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace capsample {

class Direction;

namespace detail {
// Wraps coordinates already known to be unit-norm (sampler internals).
Direction unit_direction(std::vector<double> coords);
}  // namespace detail

// A unit vector in R^n, n >= 1. from_coords accepts input whose Euclidean
// norm is within 1e-6 of 1 and renormalizes it; anything further off is
// rejected as a caller error rather than silently rescaled.
class Direction {
 public:
  static Direction from_coords(std::vector<double> coords);
  static Direction canonical_axis(int n, int index);  // e_index, 0-based

  int dimension() const { return static_cast<int>(coords_.size()); }
  const std::vector<double>& coords() const { return coords_; }
  double operator[](std::size_t i) const { return coords_[i]; }

  double dot(const Direction& other) const;
  double dot(std::span<const double> v) const;

 private:
  explicit Direction(std::vector<double> coords) : coords_(std::move(coords)) {}
  friend Direction detail::unit_direction(std::vector<double> coords);

  std::vector<double> coords_;
};

// Spherical cap: all unit vectors within planar angle theta0 of the axis.
struct ConeSpec {
  ConeSpec(Direction axis_in, double theta0_in);

  Direction axis;
  double theta0;
};

// Band between two coaxial caps with planar angles theta1 <= theta2.
struct HollowConeSpec {
  HollowConeSpec(Direction axis_in, double theta1_in, double theta2_in);

  Direction axis;
  double theta1;
  double theta2;
};

}  // namespace capsample
