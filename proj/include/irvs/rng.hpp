#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace irvs {

/// Finalizer of splitmix64; full-avalanche 64-bit mixer.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Named sub-stream tags. Random-phase streams additionally fold in the
// quantizer bits and the user index, see random_phase_stream().
enum StreamTag : std::uint64_t {
  kGeometryStream = 1,
  kChannelStream = 2,
  kRandomPhaseStream = 16,
};

/// Counter-based seed derivation: every (master, drop, stream) triple gets an
/// independent generator, so drops can run in any order or in parallel and
/// still reproduce bit-exactly.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t drop,
                                    std::uint64_t stream) {
  std::uint64_t s = splitmix64(master ^ 0xA5A5A5A5A5A5A5A5ULL);
  s = splitmix64(s ^ (drop + 0x9E3779B97F4A7C15ULL));
  s = splitmix64(s ^ (stream + 0xD1B54A32D192ED03ULL));
  return s;
}

/// Stream tag for the per-(scheme, user) random-phase draws.
/// bits = 0 selects the continuous scheme, bits >= 1 the discrete ones.
constexpr std::uint64_t random_phase_stream(int bits, int user) {
  return kRandomPhaseStream + (static_cast<std::uint64_t>(bits) << 32) +
         static_cast<std::uint64_t>(user);
}

/// Deterministic random stream: mt19937_64 behind a small typed interface.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform draw on [lo, hi).
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * unit_(engine_);
  }

  /// Standard normal draw.
  double gaussian() { return normal_(engine_); }

  /// Circularly symmetric complex Gaussian CN(0, variance).
  std::complex<double> complex_gaussian(double variance) {
    const double s = std::sqrt(variance / 2.0);
    const double re = normal_(engine_);
    const double im = normal_(engine_);
    return {s * re, s * im};
  }

  /// Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_);
  }

 private:
  std::mt19937_64 engine_;
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace irvs
