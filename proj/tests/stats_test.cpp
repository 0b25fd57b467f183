#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "capsample/stats.hpp"
#include "oracles.hpp"

using capsample::ecdf;
using capsample::histogram;
using capsample::ks_statistic;
using capsample::ks_statistic_weighted;
using capsample::ThetaDistribution;
using capsample::weighted_ecdf;
namespace oracles = capsample::oracles;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("ThetaDistribution validates construction") {
  CHECK_THROWS_AS(ThetaDistribution(1, 0.5), std::domain_error);
  CHECK_THROWS_AS(ThetaDistribution(3, 0.0), std::domain_error);
  CHECK_THROWS_AS(ThetaDistribution(3, kPi + 0.1), std::domain_error);
}

TEST_CASE("cdf pinned values") {
  const ThetaDistribution full(3, 0.5 * kPi);
  CHECK(full.cdf(0.5 * kPi) == 1.0);
  CHECK(full.cdf(kPi / 3.0) == doctest::Approx(0.5).epsilon(1e-12));
  const ThetaDistribution planar(2, 0.25 * kPi);
  CHECK(planar.cdf(kPi / 8.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(planar.cdf(1.0) == 1.0);  // clamp beyond theta0
  CHECK_THROWS_AS(planar.cdf(-0.1), std::domain_error);
}

TEST_CASE("pdf support and pinned constant in dimension 2") {
  const ThetaDistribution d(2, 0.25 * kPi);
  CHECK(d.pdf(0.3 * kPi) == 0.0);
  for (double theta : {0.0, 0.2, 0.5, 0.25 * kPi}) {
    CHECK(d.pdf(theta) == doctest::Approx(4.0 / kPi).epsilon(1e-12));
  }
}

TEST_CASE("pdf integrates to one") {
  for (int n : {2, 3, 10, 100}) {
    const ThetaDistribution d(n, 0.25 * kPi);
    const double mass = oracles::adaptive_simpson(
        [&](double t) { return d.pdf(t); }, 0.0, d.theta0(), 1e-11);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("cdf is the integral of pdf") {
  for (int n : {2, 3, 10, 100}) {
    const ThetaDistribution d(n, 0.6);
    for (double theta : {0.1, 0.3, 0.5}) {
      const double integral = oracles::adaptive_simpson(
          [&](double t) { return d.pdf(t); }, 0.0, theta, 1e-11);
      CHECK(std::abs(d.cdf(theta) - integral) <= 1e-8);
    }
  }
}

TEST_CASE("ecdf basics") {
  const std::vector<double> one = {0.4};
  CHECK(ecdf(one, 0.4) == 1.0);
  CHECK(ecdf(one, 0.39) == 0.0);
  const std::vector<double> two = {0.1, 0.3};
  CHECK(ecdf(two, 0.2) == 0.5);
  CHECK_THROWS_AS(ecdf(std::vector<double>{}, 0.0), std::domain_error);
}

TEST_CASE("weighted_ecdf basics") {
  const std::vector<double> samples = {0.1, 0.3};
  CHECK(weighted_ecdf(samples, std::vector<double>{1.0, 1.0}, 0.2) ==
        ecdf(samples, 0.2));
  CHECK(weighted_ecdf(samples, std::vector<double>{1.0, 0.0}, 0.2) == 1.0);
  CHECK(weighted_ecdf(samples, std::vector<double>{1.0, 3.0}, 0.2) ==
        doctest::Approx(0.25).epsilon(1e-15));
  CHECK_THROWS_AS(weighted_ecdf(samples, std::vector<double>{0.0, 0.0}, 0.2),
                  std::domain_error);
  CHECK_THROWS_AS(weighted_ecdf(samples, std::vector<double>{1.0, -1.0}, 0.2),
                  std::domain_error);
}

TEST_CASE("ecdf functions are monotone with range [0, 1]") {
  std::vector<double> samples;
  std::vector<double> weights;
  for (int i = 0; i < 57; ++i) {
    samples.push_back(std::fmod(0.37 * i, 1.3));
    weights.push_back(0.01 + std::fmod(0.11 * i, 0.9));
  }
  double prev_plain = 0.0;
  double prev_weighted = 0.0;
  for (double t = -0.1; t <= 1.5; t += 0.01) {
    const double plain = ecdf(samples, t);
    const double weighted = weighted_ecdf(samples, weights, t);
    CHECK(plain >= prev_plain);
    CHECK(weighted >= prev_weighted);
    CHECK(plain >= 0.0);
    CHECK(plain <= 1.0);
    CHECK(weighted >= 0.0);
    CHECK(weighted <= 1.0);
    prev_plain = plain;
    prev_weighted = weighted;
  }
}

TEST_CASE("ks_statistic best case: samples at the mid-quantiles") {
  const ThetaDistribution d(2, 1.0);  // uniform on [0, 1]
  const std::size_t count = 20;
  std::vector<double> samples(count);
  for (std::size_t i = 0; i < count; ++i) {
    samples[i] = (static_cast<double>(i) + 0.5) / static_cast<double>(count);
  }
  const auto report = ks_statistic(samples, d);
  CHECK(report.statistic ==
        doctest::Approx(1.0 / (2.0 * static_cast<double>(count))).epsilon(1e-12));
  CHECK(report.sample_count == count);
  CHECK(report.critical_value_1pct ==
        doctest::Approx(1.628 / std::sqrt(static_cast<double>(count))).epsilon(1e-12));
}

TEST_CASE("ks_statistic two-sample enumeration case") {
  // F(x1) = 0.25, F(x2) = 0.5 -> sup candidate 1 - F(x2) = 0.5
  const ThetaDistribution d(2, 1.0);
  const auto report = ks_statistic({0.25, 0.5}, d);
  CHECK(report.statistic == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("ks_statistic sorts unsorted input") {
  const ThetaDistribution d(2, 1.0);
  const auto sorted = ks_statistic({0.1, 0.2, 0.9}, d);
  const auto shuffled = ks_statistic({0.9, 0.1, 0.2}, d);
  CHECK(sorted.statistic == shuffled.statistic);
  CHECK_THROWS_AS(ks_statistic({}, d), std::domain_error);
}

TEST_CASE("ks_statistic equals a brute-force sup") {
  const ThetaDistribution d(5, 1.2);
  std::vector<double> samples;
  for (int i = 0; i < 60; ++i) {
    samples.push_back(std::fmod(0.17 + 0.731 * i, 1.0) * 1.2);
  }
  const auto report = ks_statistic(samples, d);
  // sup over a dense grid plus both one-sided limits at every jump
  double brute = 0.0;
  for (int g = 0; g <= 100000; ++g) {
    const double theta = 1.2 * g / 100000.0;
    brute = std::max(brute, std::abs(ecdf(samples, theta) - d.cdf(theta)));
  }
  for (double x : samples) {
    const double cdf = d.cdf(x);
    brute = std::max(brute, std::abs(ecdf(samples, x) - cdf));
    brute = std::max(
        brute, std::abs(ecdf(samples, std::nextafter(x, -1.0)) - cdf));
  }
  CHECK(std::abs(report.statistic - brute) <= 1e-12);
}

TEST_CASE("weighted ks reduces to plain ks under equal weights") {
  const ThetaDistribution d(4, 1.0);
  std::vector<double> samples;
  for (int i = 0; i < 40; ++i) samples.push_back(std::fmod(0.31 * i, 1.0));
  const std::vector<double> weights(samples.size(), 2.5);
  const auto plain = ks_statistic(samples, d);
  const auto weighted = ks_statistic_weighted(samples, weights, d);
  CHECK(weighted.statistic == doctest::Approx(plain.statistic).epsilon(1e-12));
}

TEST_CASE("histogram basics") {
  // all samples in one bin
  const std::vector<double> tight = {0.205, 0.201, 0.209};
  const auto bins = histogram(tight, 10, 0.2, 0.3);
  CHECK(bins.size() == 10);
  CHECK(bins[0].left == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(bins[0].density == doctest::Approx(1.0 / 0.01).epsilon(1e-12));
  for (std::size_t i = 1; i < bins.size(); ++i) CHECK(bins[i].density == 0.0);
  CHECK_THROWS_AS(histogram(tight, 0, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(histogram(tight, 4, 1.0, 1.0), std::domain_error);
}

TEST_CASE("histogram area equals the in-range fraction") {
  std::vector<double> samples;
  for (int i = 0; i < 1000; ++i) samples.push_back(std::fmod(0.0137 * i, 2.0));
  const auto bins = histogram(samples, 37, 0.25, 1.25);
  double area = 0.0;
  const double width = 1.0 / 37.0;
  for (const auto& bin : bins) area += bin.density * width;
  std::size_t inside = 0;
  for (double s : samples) {
    if (s >= 0.25 && s <= 1.25) ++inside;
  }
  CHECK(area == doctest::Approx(static_cast<double>(inside) / samples.size())
                    .epsilon(1e-12));
}
