#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "rsverify/rational.hpp"

namespace rsv {

/// Thrown by the Weyl-quotient evaluators when the Weyl denominator vanishes.
class DegeneratePoint : public MathError {
 public:
  using MathError::MathError;
};

/// Dominant SL4 weight n1*w1 + n2*w2 + n3*w3 in fundamental-weight coordinates.
struct WeightA3 {
  unsigned n1 = 0, n2 = 0, n3 = 0;

  /// Partition (n1+n2+n3, n2+n3, n3, 0).
  std::array<unsigned, 4> partition() const { return {n1 + n2 + n3, n2 + n3, n3, 0}; }
  /// Drops full columns: lambda -> (l1-l2, l2-l3, l3-l4).
  static WeightA3 from_partition(const std::array<unsigned, 4>& lambda);

  auto operator<=>(const WeightA3&) const = default;
  std::string str() const;
};

/// Dominant Sp4 weight mSpin*(spin fundamental) + mStd*(5-dim fundamental).
struct WeightC2 {
  unsigned mSpin = 0, mStd = 0;
  /// Highest weight in the e1,e2 basis of the torus diag(a, b, 1/b, 1/a).
  std::pair<int, int> highest_weight() const {
    return {static_cast<int>(mSpin + mStd), static_cast<int>(mStd)};
  }
  auto operator<=>(const WeightC2&) const = default;
  std::string str() const;
};

/// Conjugacy class diag(alpha1, alpha2, alpha3, alpha4) in SL4(C).
class SatakePointA3 {
 public:
  /// Throws MathError unless all four entries are nonzero with product 1.
  explicit SatakePointA3(std::array<Rat, 4> alpha);
  /// alpha4 is solved from the determinant condition.
  static SatakePointA3 from_three(const Rat& a1, const Rat& a2, const Rat& a3);

  const std::array<Rat, 4>& alpha() const { return alpha_; }
  const Rat& operator[](std::size_t i) const { return alpha_[i]; }
  bool pairwise_distinct() const;
  SatakePointA3 inverse() const;
  std::string str() const;

 private:
  std::array<Rat, 4> alpha_;
};

/// Class diag(a, b, 1/b, 1/a) in Sp4(C).
struct SatakePointC2 {
  Rat a, b;
  SatakePointC2(Rat a_, Rat b_);
  bool weyl_regular() const;
  std::string str() const;
};

/// Number of semistandard tableaux of the given shape with entries in {1..4},
/// grouped by content (multiplicity of each entry). These are the weight
/// multiplicities (Kostka numbers) of the GL4 irreducible.
using ContentCounts = std::map<std::array<unsigned, 4>, std::uint64_t>;

/// Computed by enumerating tableaux as chains of horizontal strips; cached
/// per shape (thread-safe).
const ContentCounts& tableau_contents(const WeightA3& w);

/// Total number of tableaux, i.e. the dimension of the representation.
std::uint64_t tableau_count(const WeightA3& w);

/// Character A[n1,n2,n3] at a point, summed over semistandard tableaux.
/// Total: works at any point, including repeated coordinates.
Rat schur_A3(const WeightA3& w, const SatakePointA3& pt);

/// Same character via the bialternant quotient. Throws DegeneratePoint when
/// two coordinates coincide.
Rat schur_A3_wcf(const WeightA3& w, const SatakePointA3& pt);

/// Weight multiplicities of an Sp4 irreducible as a Laurent polynomial in
/// (a, b): exponent pair -> multiplicity. Obtained by exact division of the
/// Weyl alternant by the Weyl denominator; cached per weight.
using LaurentCounts = std::map<std::pair<int, int>, std::int64_t>;
const LaurentCounts& c2_weight_multiplicities(const WeightC2& w);

/// Weyl character formula quotient for Sp4 evaluated at a point: the
/// alternating sum over the eight signed permutations divided by the Weyl
/// denominator. Throws DegeneratePoint when the denominator vanishes.
Rat char_C2(const WeightC2& w, const SatakePointC2& pt);

/// Character evaluated from the weight multiplicities; total.
Rat char_C2_total(const WeightC2& w, const SatakePointC2& pt);

}  // namespace rsv
