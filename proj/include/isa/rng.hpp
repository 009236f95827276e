#pragma once

#include <cstdint>
#include <random>

namespace isa {

/// Seeded random stream shared by the optimizer, the repair rule and the
/// stochastic benchmark. Uniform reals are built from the top 53 bits of a
/// 64-bit Mersenne Twister so values are identical across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform draw in [0, 1).
  double uniform() {
    ++draws_;
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform draw in [lower, upper).
  double uniform(double lower, double upper) {
    return lower + (upper - lower) * uniform();
  }

  /// Number of uniform draws consumed so far.
  std::uint64_t draws() const { return draws_; }

private:
  std::mt19937_64 engine_;
  std::uint64_t draws_ = 0;
};

/// Derives an independent seed from `seed` for a secondary stream.
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

} // namespace isa
