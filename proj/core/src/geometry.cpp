#include "capsample/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace capsample {
namespace {

constexpr double kAxisNormTol = 1e-6;

double norm(std::span<const double> v) {
  double sq = 0.0;
  for (double c : v) sq += c * c;
  return std::sqrt(sq);
}

}  // namespace

namespace detail {
Direction unit_direction(std::vector<double> coords) {
  return Direction(std::move(coords));
}
}  // namespace detail

Direction Direction::from_coords(std::vector<double> coords) {
  if (coords.empty()) {
    throw std::domain_error("Direction: at least one coordinate required");
  }
  const double len = norm(coords);
  if (!(std::abs(len - 1.0) <= kAxisNormTol)) {
    throw std::domain_error(
        "Direction: coordinates must have unit norm (within 1e-6)");
  }
  for (double& c : coords) c /= len;
  return Direction(std::move(coords));
}

Direction Direction::canonical_axis(int n, int index) {
  if (n < 1 || index < 0 || index >= n) {
    throw std::domain_error("Direction::canonical_axis: index out of range");
  }
  std::vector<double> coords(static_cast<std::size_t>(n), 0.0);
  coords[static_cast<std::size_t>(index)] = 1.0;
  return Direction(std::move(coords));
}

double Direction::dot(const Direction& other) const {
  return dot(std::span<const double>(other.coords_));
}

double Direction::dot(std::span<const double> v) const {
  if (v.size() != coords_.size()) {
    throw std::invalid_argument("Direction::dot: dimension mismatch");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < coords_.size(); ++i) acc += coords_[i] * v[i];
  return acc;
}

ConeSpec::ConeSpec(Direction axis_in, double theta0_in)
    : axis(std::move(axis_in)), theta0(theta0_in) {
  if (axis.dimension() < 2) {
    throw std::domain_error("ConeSpec: axis dimension must be >= 2");
  }
  if (!(theta0 >= 0.0 && theta0 <= std::numbers::pi)) {
    throw std::domain_error("ConeSpec: theta0 must lie in [0, pi]");
  }
}

HollowConeSpec::HollowConeSpec(Direction axis_in, double theta1_in,
                               double theta2_in)
    : axis(std::move(axis_in)), theta1(theta1_in), theta2(theta2_in) {
  if (axis.dimension() < 2) {
    throw std::domain_error("HollowConeSpec: axis dimension must be >= 2");
  }
  if (!(theta1 >= 0.0 && theta1 <= theta2 && theta2 <= std::numbers::pi)) {
    throw std::domain_error(
        "HollowConeSpec: angles must satisfy 0 <= theta1 <= theta2 <= pi");
  }
}

}  // namespace capsample
