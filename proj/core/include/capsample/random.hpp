#pragma once

#include <array>
#include <cstdint>

namespace capsample {

// Deterministic, seedable random stream: xoshiro256++ seeded through
// splitmix64. The same seed always reproduces the same variate sequence.
//
// Normal variates use the trigonometric Box-Muller transform with the spare
// value cached, so the normal sequence is part of the determinism contract.
//
// substream(seed, worker) jumps the generator 'worker' times by 2^128 steps,
// giving parallel workers non-overlapping streams from one seed.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  static RandomStream substream(std::uint64_t seed, std::uint64_t worker);

  std::uint64_t next_u64();

  // Uniform on [0, 1), 53-bit resolution.
  double uniform();

  // Uniform on [lo, hi).
  double uniform(double lo, double hi);

  // Standard normal variate.
  double normal();

 private:
  void jump();

  std::array<std::uint64_t, 4> state_{};
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace capsample
