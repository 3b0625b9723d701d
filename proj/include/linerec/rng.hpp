#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace linerec {

/// splitmix64 finalizer; the fixed mixing function behind derive_seed.
constexpr std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Per-run stream seed: splitmix64(master ^ golden_ratio * (index + 1)).
/// Monte Carlo run i always draws from the same stream regardless of how
/// many runs execute or in which order.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ (0x9E3779B97F4A7C15ull * (index + 1)));
}

/// Standard-normal sampler with a pinned algorithm: mt19937_64 driving
/// 53-bit uniforms through the Box-Muller transform. std::normal_distribution
/// is implementation-defined, so it is not used here.
class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed) : gen_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform_open();  // (0, 1], keeps log() finite
    const double u2 = uniform();       // [0, 1)
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform_open() {
    return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
  }

  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace linerec
