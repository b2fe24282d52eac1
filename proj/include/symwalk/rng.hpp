// Seedable, jumpable 64-bit generator (xoshiro256**) and the bounded
// sampling built on it. Output is identical on every platform.
#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace symwalk {

class Rng {
 public:
  using result_type = std::uint64_t;

  /// State filled from splitmix64(seed).
  explicit Rng(std::uint64_t seed = 0);
  /// Independent stream `index` of a seed: the seeded state advanced by
  /// `index` jumps of 2^128 draws.
  static Rng stream(std::uint64_t seed, std::uint64_t index);
  /// Raw state, for reference vectors. Must not be all zero.
  static Rng from_state(const std::array<std::uint64_t, 4>& state);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();

  /// Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform double in [0, 1).
  double unit();
  void jump();

 private:
  std::array<std::uint64_t, 4> state_{};
};

}  // namespace symwalk
