#pragma once

#include <cstdint>
#include <string_view>

#include "rsverify/characters.hpp"
#include "rsverify/matrix.hpp"
#include "rsverify/rational.hpp"

namespace rsv {

/// SplitMix64 (Steele, Lea, Flood). Each check draws from its own stream
/// seeded with seed ^ fnv1a64(check name).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
 private:
  std::uint64_t state_;
};

std::uint64_t fnv1a64(std::string_view text);

/// Rational samplers on top of SplitMix64. Integers are drawn without
/// modulo bias by rejection.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  static Sampler for_check(std::uint64_t seed, std::string_view check_name) {
    return Sampler(seed ^ fnv1a64(check_name));
  }

  std::uint64_t next() { return rng_.next(); }
  /// Uniform in [0, n); n >= 1.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  long between(long lo, long hi);

  /// num/den with num in [-bound, bound] \ {0} and den in [1, bound].
  Rat nonzero_rat(unsigned bound);
  /// n/d with 1 <= n < d <= bound (bound >= 2): a value for |p| in (0, 1).
  Rat unit_interval(unsigned bound);

  /// (a1, a2, a3, 1/(a1 a2 a3)); with `distinct`, redrawn until the four
  /// coordinates are pairwise distinct.
  SatakePointA3 a3_point(unsigned bound, bool distinct = false);
  /// (a, b); with `regular`, redrawn until the Weyl denominator is nonzero.
  SatakePointC2 c2_point(unsigned bound, bool regular = false);
  /// Entries in [-bound, bound], redrawn until invertible.
  RatMatrix invertible_matrix(std::size_t n, unsigned bound);

 private:
  SplitMix64 rng_;
};

}  // namespace rsv
