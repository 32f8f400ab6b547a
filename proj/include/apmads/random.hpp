#pragma once

#include <cstdint>
#include <random>

namespace apmads {

/// Seeded random source owned by a single run: std::mt19937_64 plus a
/// Box-Muller normal generator, reproducible per (seed, stream).
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0);

  /// Independent source derived from the same seed; used to keep poll
  /// directions and blackbox noise on separate streams.
  [[nodiscard]] RandomSource split(std::uint64_t stream) const;

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();

  /// Standard normal variate.
  double standard_normal();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

inline double standard_normal(RandomSource& rng) { return rng.standard_normal(); }

}  // namespace apmads
