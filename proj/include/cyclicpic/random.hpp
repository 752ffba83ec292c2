#pragma once

#include <cstdint>
#include <limits>
#include <random>

#include "cyclicpic/numeric.hpp"

namespace cyclicpic {

// Deterministic across platforms: std::mt19937_64 output is fully specified,
// and the range reduction below does not depend on the standard library's
// distributions.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return lo + static_cast<std::int64_t>(x % span);
  }

  /// num/den with num in [-bound, bound] and den in [1, bound].
  Rational rational(std::int64_t bound = 100) {
    Rational q(BigInt(static_cast<long>(uniform(-bound, bound))),
               BigInt(static_cast<long>(uniform(1, bound))));
    q.canonicalize();
    return q;
  }

  Rational nonzero_rational(std::int64_t bound = 100) {
    Rational q = rational(bound);
    while (q == 0) q = rational(bound);
    return q;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cyclicpic
