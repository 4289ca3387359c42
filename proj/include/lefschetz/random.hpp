#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace lefschetz {

/// Seeded random source passed explicitly to every randomized routine.
///
/// Integer sampling is done by rejection on the raw 64-bit engine output
/// rather than through std::uniform_int_distribution, whose algorithm is
/// implementation-defined; this keeps certificates replayable across
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  /// Uniform integer in [lo, hi] \ {0}; requires lo < 0 or hi > 0.
  std::int64_t nonzero(std::int64_t lo, std::int64_t hi);

  /// Independent child stream whose seed depends only on this stream's seed
  /// and the name, never on how much of this stream has been consumed.
  [[nodiscard]] Rng stream(std::string_view name) const;

  /// Child stream keyed by an index (e.g. a trial number).
  [[nodiscard]] Rng stream(std::uint64_t index) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace lefschetz
