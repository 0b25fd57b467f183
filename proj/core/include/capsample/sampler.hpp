#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "capsample/geometry.hpp"
#include "capsample/random.hpp"

namespace capsample {

// How to draw the planar angle of a cap sample.
//
// kInverse maps a uniform variate through the inverse angle map; it fails
// with underflow_error when the cap's solid-angle fraction underflows.
// kRejection runs the one-dimensional log-domain accept/reject loop, which
// has no underflow regime. kAuto picks kInverse while the fraction stays
// comfortably representable (>= 1e-280) and kRejection otherwise.
enum class AngleMethod { kInverse, kRejection, kAuto };

// Uniform point on the unit sphere in R^n (n >= 1): normalized vector of
// standard normals. The all-zero draw is redrawn.
Direction sphere_point(int n, RandomStream& rng);

// Planar angle with density proportional to sin^{n-2} on [0, theta0], by
// inverse transform sampling.
double planar_angle_inverse(double theta0, int n, RandomStream& rng);

// Same distribution as planar_angle_inverse, by one-dimensional rejection
// sampling with the acceptance test in the log domain. If trial_count is
// non-null it is incremented once per proposal.
double planar_angle_rejection(double theta0, int n, RandomStream& rng,
                              std::uint64_t* trial_count = nullptr);

// Uniform point on the spherical cap described by spec.
Direction cap_point(const ConeSpec& spec, AngleMethod method,
                    RandomStream& rng);

// Uniform point on the band between two coaxial caps. The inverse
// transform is the only path here; a band whose solid-angle width
// underflows to zero raises underflow_error.
Direction hollow_cone_point(const HollowConeSpec& spec, RandomStream& rng);

// Image of x under the simple rotation taking the last canonical basis
// vector onto mu within their common plane; vectors orthogonal to that
// plane are fixed. O(n) operations.
std::vector<double> rotate_from_nth_axis(std::span<const double> x,
                                         const Direction& mu);

}  // namespace capsample
