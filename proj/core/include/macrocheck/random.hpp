#pragma once

#include <cstdint>

#include "macrocheck/rational.hpp"

namespace macrocheck {

/// SplitMix64 (Steele, Lea, Flood 2014): state += 0x9E3779B97F4A7C15, then
/// the standard xor-shift-multiply finalizer. Fully specified, so a seed
/// reproduces the same stream on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform on [0, bound) by rejection; `bound` must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform on [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

  /// Independent stream for sample `index` of a run seeded with `seed`.
  /// Every sample gets its own stream so results do not depend on how the
  /// index range is split across workers.
  static SplitMix64 for_sample(std::uint64_t seed, std::uint64_t index);

 private:
  std::uint64_t state_;
};

/// Distribution of one random rational coordinate.
struct RationalDraw {
  std::uint64_t numerator_bound = 10;
  std::uint64_t denominator_bound = 10;
  /// Chance of returning exactly zero; must lie in [0, 1] with a numerator
  /// and denominator that fit in 64 bits.
  Rational zero_probability = Rational(1, 16);
};

/// Zero with probability zero_probability, otherwise n/d with n uniform on
/// [-numerator_bound, numerator_bound] and d uniform on [1, denominator_bound].
Rational draw_rational(SplitMix64& rng, const RationalDraw& draw);

/// Throws PreconditionError when bounds are zero or the probability is out of range.
void validate(const RationalDraw& draw);

}  // namespace macrocheck
