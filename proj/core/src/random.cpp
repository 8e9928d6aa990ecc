#include "macrocheck/random.hpp"

#include <limits>

#include "macrocheck/errors.hpp"

namespace macrocheck {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t SplitMix64::next() {
  state_ += kGolden;
  return mix(state_);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("SplitMix64::below(0)");
  // Reject the top partial bucket so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

std::int64_t SplitMix64::between(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw PreconditionError("SplitMix64::between with hi < lo");
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<std::int64_t>(next());
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + below(span + 1));
}

SplitMix64 SplitMix64::for_sample(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(mix(seed) ^ mix(index * kGolden + 1));
}

void validate(const RationalDraw& draw) {
  if (draw.numerator_bound == 0 || draw.denominator_bound == 0) {
    throw PreconditionError("rational draw bounds must be at least 1");
  }
  if (draw.numerator_bound > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw PreconditionError("numerator bound exceeds 2^63-1");
  }
  const Rational& p = draw.zero_probability;
  if (p.sign() < 0 || p > Rational(1)) throw PreconditionError("zero probability outside [0, 1]");
  if (!p.denominator().fits_ulong_p()) throw PreconditionError("zero probability denominator too large");
}

Rational draw_rational(SplitMix64& rng, const RationalDraw& draw) {
  const Rational& p = draw.zero_probability;
  if (!p.is_zero()) {
    const auto den = p.denominator().get_ui();
    const auto num = p.numerator().get_ui();
    if (rng.below(den) < num) return Rational();
  }
  const auto bound = static_cast<std::int64_t>(draw.numerator_bound);
  const std::int64_t n = rng.between(-bound, bound);
  const auto d = 1 + rng.below(draw.denominator_bound);
  return Rational(BigInt(static_cast<long>(n)), BigInt(static_cast<unsigned long>(d)));
}

}  // namespace macrocheck
