#include "rsverify/sampling.hpp"

#include <stdexcept>

namespace rsv {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t Sampler::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("empty sampling range");
  const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
  for (;;) {
    const std::uint64_t r = rng_.next();
    if (r >= threshold) return r % n;
  }
}

long Sampler::between(long lo, long hi) {
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rat Sampler::nonzero_rat(unsigned bound) {
  if (bound == 0) throw std::invalid_argument("sampling bound must be positive");
  long num = between(1, bound);
  if (below(2)) num = -num;
  return make_rat(num, between(1, bound));
}

Rat Sampler::unit_interval(unsigned bound) {
  if (bound < 2) throw std::invalid_argument("|p| sampling bound must be at least 2");
  const long d = between(2, bound);
  return make_rat(between(1, d - 1), d);
}

SatakePointA3 Sampler::a3_point(unsigned bound, bool distinct) {
  for (;;) {
    const Rat a1 = nonzero_rat(bound), a2 = nonzero_rat(bound), a3 = nonzero_rat(bound);
    SatakePointA3 pt = SatakePointA3::from_three(a1, a2, a3);
    if (!distinct || pt.pairwise_distinct()) return pt;
  }
}

SatakePointC2 Sampler::c2_point(unsigned bound, bool regular) {
  for (;;) {
    const Rat a = nonzero_rat(bound), b = nonzero_rat(bound);
    SatakePointC2 pt(a, b);
    if (!regular || pt.weyl_regular()) return pt;
  }
}

RatMatrix Sampler::invertible_matrix(std::size_t n, unsigned bound) {
  for (;;) {
    RatMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = between(-static_cast<long>(bound), bound);
    if (m.determinant() != 0) return m;
  }
}

}  // namespace rsv
