#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace g2lab {

/// Deterministic random stream: fixed mapping from mt19937_64 words to
/// doubles so results do not depend on the standard library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Derived stream (order-independent per-trial seeding).
  static Rng forTrial(std::uint64_t seed, std::uint64_t trial) {
    return Rng(seed ^ (0x9E3779B97F4A7C15ULL * (trial + 1)));
  }

  double uniform() {  // [0,1)
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal() {
    if (haveSpare_) {
      haveSpare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do { u1 = uniform(); } while (u1 <= 0.0);
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(6.283185307179586476925286766559 * u2);
    haveSpare_ = true;
    return r * std::cos(6.283185307179586476925286766559 * u2);
  }
  std::uint64_t bits() { return eng_(); }

 private:
  std::mt19937_64 eng_;
  bool haveSpare_ = false;
  double spare_ = 0.0;
};

}  // namespace g2lab
