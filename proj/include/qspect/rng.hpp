#pragma once

#include <cstdint>

#include "qspect/quaternion.hpp"

namespace qspect {

/// Seedable xoshiro256** generator with hand-rolled uniform doubles.
/// Standard-library distributions are implementation defined; every
/// randomized verification suite goes through this class so a (suite,
/// seed) pair reproduces byte-identical reports on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    // splitmix64 expansion of the seed into the state.
    std::uint64_t x = seed;
    for (auto& w : s_) {
      x += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      w = z ^ (z >> 31);
    }
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  Quaternion quaternion(double scale = 1.0) {
    return {uniform(-scale, scale), uniform(-scale, scale),
            uniform(-scale, scale), uniform(-scale, scale)};
  }

  Quaternion unit_quaternion() {
    Quaternion q;
    do {
      q = quaternion();
    } while (q.norm() < 1e-3);
    return q * (1.0 / q.norm());
  }

  /// Unit purely imaginary quaternion (a point of the sphere S).
  Quaternion imaginary_unit() {
    Quaternion q;
    double n;
    do {
      q = {0, uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
      n = q.norm();
    } while (n < 1e-3);
    return q * (1.0 / n);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t s_[4];
};

}  // namespace qspect
