#pragma once

#include <cstdint>

namespace sievelab {

// The single randomness source of the project: splitmix64 (Steele et al.,
// "Fast splittable pseudorandom number generators").  Every random quantity
// is derived from one explicit 64-bit seed through this generator, so runs
// are reproducible bit-for-bit across platforms and thread counts.  The
// double mapping keeps exactly the top 53 bits, which is portable.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit mantissa.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [-1, 1).
  double uniform_pm1() { return 2.0 * uniform01() - 1.0; }

  // Uniform integer in [0, n), n > 0.  Multiply-shift, no modulo bias worth
  // caring about at 64 bits.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

 private:
  std::uint64_t state_;
};

// Derives an independent substream seed (trial k of a batch keyed by `seed`).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 g(seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1)));
  return g.next();
}

}  // namespace sievelab
