#pragma once

#include <cstdint>

#include "skewlab/rational.hpp"

namespace skewlab {

/// SplitMix64. Small, fast, and identical on every platform, which matters
/// because seeds are recorded in run manifests and replayed in tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n). Unbiased via rejection.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  /// Uniform integer in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Uniform in [0, 1) with 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform rational k / 2^denom_bits with k in [-2^denom_bits, 2^denom_bits].
  Rational rational_unit(int denom_bits = 16) {
    const std::int64_t scale = std::int64_t{1} << denom_bits;
    return Rational(range(-scale, scale), scale);
  }

  /// Derives an independent stream, used to hand out per-worker seeds.
  static std::uint64_t derive(std::uint64_t base, std::uint64_t index) {
    Rng r(base ^ (0x517cc1b727220a95ULL * (index + 1)));
    return r.next();
  }

 private:
  std::uint64_t state_;
};

}  // namespace skewlab
