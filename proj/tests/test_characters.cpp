#include "doctest.h"

#include <algorithm>
#include <functional>

#include "rsverify/characters.hpp"
#include "rsverify/littlewood.hpp"
#include "rsverify/sampling.hpp"

using namespace rsv;

namespace {

// Fills the Young diagram cell by cell, rows weakly and columns strictly
// increasing, and sums the monomials of the fillings.
Rat ssyt_box_oracle(const std::array<unsigned, 4>& shape, const SatakePointA3& pt) {
  std::vector<std::pair<unsigned, unsigned>> cells;
  for (unsigned r = 0; r < 4; ++r)
    for (unsigned c = 0; c < shape[r]; ++c) cells.push_back({r, c});
  std::vector<std::vector<unsigned>> fill(4, std::vector<unsigned>(shape[0] + 1, 0));
  Rat total = 0;
  std::function<void(std::size_t, Rat)> go = [&](std::size_t i, Rat acc) {
    if (i == cells.size()) {
      total += acc;
      return;
    }
    const auto [r, c] = cells[i];
    unsigned lo = 1;
    if (c > 0) lo = std::max(lo, fill[r][c - 1]);
    if (r > 0) lo = std::max(lo, fill[r - 1][c] + 1);
    for (unsigned e = lo; e <= 4; ++e) {
      fill[r][c] = e;
      go(i + 1, acc * pt[e - 1]);
    }
  };
  go(0, Rat(1));
  return total;
}

std::uint64_t weyl_dimension(const WeightA3& w) {
  const auto l = w.partition();
  Rat d = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) d *= make_rat(static_cast<long>(l[i]) - static_cast<long>(l[j]) + j - i, j - i);
  return d.get_num().get_ui();
}

Rat e_k(const SatakePointA3& pt, unsigned k) {
  Rat s = 0;
  for (unsigned mask = 0; mask < 16; ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != k) continue;
    Rat p = 1;
    for (int i = 0; i < 4; ++i)
      if (mask >> i & 1) p *= pt[i];
    s += p;
  }
  return s;
}

Rat character_of(const WeightMultiset& m, const SatakePointA3& pt) {
  Rat s = 0;
  for (const auto& [w, k] : m) s += schur_A3(w, pt) * k;
  return s;
}

}  // namespace

TEST_CASE("Satake point validation") {
  CHECK_THROWS_AS(SatakePointA3({Rat(1), Rat(2), Rat(3), Rat(4)}), MathError);
  CHECK_THROWS_AS(SatakePointA3::from_three(0, 1, 1), MathError);
  const auto pt = SatakePointA3::from_three(2, 3, Rat(1, 5));
  CHECK(pt[3] == Rat(5, 6));
  CHECK(pt.pairwise_distinct());
  CHECK_THROWS_AS(SatakePointC2(0, 1), MathError);
}

TEST_CASE("SL4 characters at the fundamental weights") {
  Sampler rng(1);
  for (int t = 0; t < 10; ++t) {
    const auto pt = rng.a3_point(9);
    CHECK(schur_A3(WeightA3{}, pt) == 1);
    CHECK(schur_A3(WeightA3{1, 0, 0}, pt) == e_k(pt, 1));
    CHECK(schur_A3(WeightA3{0, 1, 0}, pt) == e_k(pt, 2));
    CHECK(schur_A3(WeightA3{0, 0, 1}, pt) == e_k(pt, 3));
    CHECK(schur_A3(WeightA3{0, 0, 1}, pt) == schur_A3(WeightA3{1, 0, 0}, pt.inverse()));
  }
  const SatakePointA3 pt({Rat(2), Rat(1), Rat(1), Rat(1, 2)});
  CHECK(schur_A3(WeightA3{0, 1, 0}, pt) == ssyt_box_oracle({1, 1, 0, 0}, pt));
  CHECK(schur_A3(WeightA3{0, 1, 0}, pt) == 7);
}

TEST_CASE("tableau sum agrees with the box-filling oracle at repeated coordinates") {
  Sampler rng(2);
  for (int t = 0; t < 6; ++t) {
    const Rat a = rng.nonzero_rat(6), b = rng.nonzero_rat(6);
    const SatakePointA3 pt({a, a, b, 1 / (a * a * b)});
    for (unsigned n1 = 0; n1 <= 3; ++n1)
      for (unsigned n2 = 0; n1 + n2 <= 3; ++n2)
        for (unsigned n3 = 0; n1 + n2 + n3 <= 3; ++n3) {
          const WeightA3 w{n1, n2, n3};
          CHECK(schur_A3(w, pt) == ssyt_box_oracle(w.partition(), pt));
        }
  }
}

TEST_CASE("bialternant") {
  Sampler rng(3);
  for (int t = 0; t < 10; ++t) {
    const auto pt = rng.a3_point(12, true);
    for (unsigned n1 = 0; n1 <= 2; ++n1)
      for (unsigned n2 = 0; n2 <= 2; ++n2)
        for (unsigned n3 = 0; n3 <= 2; ++n3) CHECK(schur_A3_wcf({n1, n2, n3}, pt) == schur_A3({n1, n2, n3}, pt));
  }
  const SatakePointA3 one({Rat(1), Rat(1), Rat(1), Rat(1)});
  CHECK_THROWS_AS(schur_A3_wcf({1, 0, 0}, one), DegeneratePoint);
  CHECK(schur_A3({1, 0, 0}, one) == 4);
}

TEST_CASE("characters are symmetric in the Satake coordinates") {
  Sampler rng(4);
  for (int t = 0; t < 5; ++t) {
    const auto pt = rng.a3_point(9);
    auto alpha = pt.alpha();
    std::array<int, 4> perm{0, 1, 2, 3};
    const Rat ref = schur_A3({2, 1, 1}, pt);
    while (std::next_permutation(perm.begin(), perm.end())) {
      const SatakePointA3 permuted({alpha[perm[0]], alpha[perm[1]], alpha[perm[2]], alpha[perm[3]]});
      CHECK(schur_A3({2, 1, 1}, permuted) == ref);
    }
  }
}

TEST_CASE("dimensions") {
  CHECK(tableau_count({1, 0, 0}) == 4);
  CHECK(tableau_count({0, 1, 0}) == 6);
  CHECK(tableau_count({0, 0, 1}) == 4);
  for (unsigned n1 = 0; n1 <= 4; ++n1)
    for (unsigned n2 = 0; n2 <= 4; ++n2)
      for (unsigned n3 = 0; n3 <= 4; ++n3) CHECK(tableau_count({n1, n2, n3}) == weyl_dimension({n1, n2, n3}));
}

TEST_CASE("Sp4 characters") {
  Sampler rng(5);
  for (int t = 0; t < 10; ++t) {
    const auto pt = rng.c2_point(9, true);
    const Rat a = pt.a, b = pt.b;
    CHECK(char_C2({0, 0}, pt) == 1);
    CHECK(char_C2({1, 0}, pt) == a + b + 1 / b + 1 / a);
    CHECK(char_C2({0, 1}, pt) == a * b + a / b + b / a + 1 / (a * b) + 1);
    const Rat spin = char_C2_total({1, 0}, pt);
    CHECK(spin * spin == char_C2_total({2, 0}, pt) + char_C2_total({0, 1}, pt) + 1);
    for (unsigned s = 0; s <= 3; ++s)
      for (unsigned u = 0; u <= 3; ++u) CHECK(char_C2({s, u}, pt) == char_C2_total({s, u}, pt));
  }
  const SatakePointC2 one(1, 1);
  CHECK_THROWS_AS(char_C2({1, 0}, one), DegeneratePoint);
  CHECK(char_C2_total({1, 0}, one) == 4);
  CHECK(char_C2_total({0, 1}, one) == 5);
  CHECK(char_C2_total({2, 0}, one) == 10);
}

TEST_CASE("Sp4 weight multiplicities are Weyl invariant") {
  for (unsigned s = 0; s <= 3; ++s)
    for (unsigned u = 0; u <= 3; ++u) {
      const auto& m = c2_weight_multiplicities({s, u});
      for (const auto& [e, k] : m) {
        const auto [x, y] = e;
        CHECK(m.at({y, x}) == k);
        CHECK(m.at({-x, y}) == k);
      }
    }
}

TEST_CASE("closed-form tensor decomposition examples") {
  CHECK(lr_closed_form(0, 1, 0) == WeightMultiset{{{0, 1, 0}, 1}});
  CHECK(lr_closed_form(1, 1, 0) == WeightMultiset{{{1, 1, 0}, 1}, {{0, 0, 1}, 1}});
  for (unsigned t = 0; t <= 3; ++t)
    for (unsigned v = 0; v <= 3; ++v) CHECK(lr_closed_form(t, 0, v) == WeightMultiset{{{t, 0, v}, 1}});
}

TEST_CASE("Littlewood-Richardson oracle examples") {
  CHECK(lr_oracle({1, 0, 0, 0}, {1, 1, 0, 0}) == WeightMultiset{{{1, 1, 0}, 1}, {{0, 0, 1}, 1}});
  const WeightMultiset sq = lr_oracle({1, 1, 0, 0}, {1, 1, 0, 0});
  CHECK(sq == WeightMultiset{{{0, 2, 0}, 1}, {{1, 0, 1}, 1}, {{0, 0, 0}, 1}});
  CHECK(lr_oracle({3, 1, 1, 0}, {0, 0, 0, 0}) == WeightMultiset{{{2, 0, 1}, 1}});
  Sampler rng(6);
  const auto pt = rng.a3_point(9);
  const Rat e2 = schur_A3({0, 1, 0}, pt);
  CHECK(e2 * e2 == character_of(sq, pt));
  CHECK_THROWS_AS(lr_oracle({1, 2, 0, 0}, {1, 0, 0, 0}), MathError);
}

TEST_CASE("tensor decompositions are multiplicative on characters") {
  std::vector<Partition4> parts;
  for (unsigned a = 0; a <= 3; ++a)
    for (unsigned b = 0; b <= a; ++b)
      for (unsigned c = 0; c <= b; ++c)
        for (unsigned d = 0; d <= c; ++d)
          if (a + b + c + d <= 3) parts.push_back({a, b, c, d});
  Sampler rng(7);
  const auto pt = rng.a3_point(9);
  for (const auto& l : parts)
    for (const auto& m : parts) {
      const Rat lhs = schur_A3(WeightA3::from_partition(l), pt) * schur_A3(WeightA3::from_partition(m), pt);
      CHECK(lhs == character_of(lr_oracle(l, m), pt));
    }
}
