#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "rsverify/lgroup.hpp"
#include "rsverify/sampling.hpp"

using namespace rsv;

namespace {

// Permutation expansion, independent of the elimination used by the library.
Rat leibniz_det(const RatMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rat total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Rat term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// det(1 - tM) at deg+1 points pins a polynomial of degree deg.
void check_charpoly(const RatMatrix& m, const RecipPoly& p) {
  for (int t = 1; t <= static_cast<int>(m.size()) + 1; ++t) {
    const Rat tt = make_rat(t, 3);
    CHECK(p(tt) == leibniz_det(RatMatrix::identity(m.size()) + m * (-tt)));
  }
}

RecipPoly power(const RecipPoly& p, int k) {
  RecipPoly r = RecipPoly::one(p.var());
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

const RecipPoly kOneMinusT = RecipPoly::from_eigenvalues({1});

}  // namespace

TEST_CASE("theta action") {
  const auto [l, g] = theta_action(1, RatMatrix::identity(4));
  CHECK(l == 1);
  CHECK(g == RatMatrix::identity(4));

  Sampler rng(1);
  for (int t = 0; t < 20; ++t) {
    const Rat lambda = rng.nonzero_rat(5);
    const RatMatrix x = rng.invertible_matrix(4, 3);
    const auto [l1, g1] = theta_action(lambda, x);
    CHECK(l1 == lambda * x.determinant());
    const auto [l2, g2] = theta_action(l1, g1);
    CHECK(l2 == lambda);
    CHECK(g2 == x);

    const Rat a = rng.nonzero_rat(9), b = rng.nonzero_rat(9);
    const auto d = RatMatrix::diagonal({a, b, 1 / b, 1 / a});
    const auto [ld, gd] = theta_action(1, d);
    CHECK(ld == 1);
    CHECK(gd == d);
  }
  CHECK_THROWS_AS(theta_action(1, RatMatrix(4)), MathError);
}

TEST_CASE("exterior square of GL4") {
  CHECK(wedge2_rep(1, RatMatrix::identity(4)) == RatMatrix::identity(6));
  CHECK(wedge2_rep(2, RatMatrix::identity(4)) == RatMatrix::identity(6) * Rat(2));
  const Rat a1(2), a2(3), a3(5), a4(7);
  CHECK(wedge2_rep(1, RatMatrix::diagonal({a1, a2, a3, a4})) ==
        RatMatrix::diagonal({a1 * a2, a1 * a3, a1 * a4, a2 * a3, a2 * a4, a3 * a4}));
  Sampler rng(2);
  for (int t = 0; t < 10; ++t) {
    const RatMatrix x = rng.invertible_matrix(4, 3), y = rng.invertible_matrix(4, 3);
    CHECK(wedge2_rep(1, x * y) == wedge2_rep(1, x) * wedge2_rep(1, y));
    CHECK(wedge2_rep(1, x).determinant() == pow(x.determinant(), 3));
  }
}

TEST_CASE("intertwiner") {
  const RatMatrix a = a_matrix();
  CHECK(a * a == RatMatrix::identity(6));
  CHECK(a.trace() == 4);
  Sampler rng(3);
  for (int t = 0; t < 20; ++t) {
    const Rat lambda = rng.nonzero_rat(5);
    const RatMatrix x = rng.invertible_matrix(4, 3);
    const auto [l1, g1] = theta_action(lambda, x);
    CHECK(a * wedge2_rep(lambda, x) * a.inverse() == wedge2_rep(l1, g1));
  }
}

TEST_CASE("L-group representations are homomorphisms") {
  Sampler rng(4);
  for (int t = 0; t < 12; ++t) {
    const LGroupElement x{rng.nonzero_rat(4), rng.invertible_matrix(4, 2), t % 2 == 0};
    const LGroupElement y{rng.nonzero_rat(4), rng.invertible_matrix(4, 2), t % 3 == 0};
    CHECK(exterior_square(x * y) == exterior_square(x) * exterior_square(y));
    CHECK(induced_standard(x * y) == induced_standard(x) * induced_standard(y));
  }
  const LGroupElement theta{1, RatMatrix::identity(4), true};
  CHECK(theta * theta == LGroupElement{});
}

TEST_CASE("GL4 Euler factors") {
  const SatakePointA3 one({Rat(1), Rat(1), Rat(1), Rat(1)});
  CHECK(lfactor_gl4(GL4Rep::Std, one) == power(kOneMinusT, 4));
  const SatakePointA3 pt({Rat(2), Rat(1), Rat(1), Rat(1, 2)});
  CHECK(lfactor_gl4(GL4Rep::Wedge2, pt) ==
        RecipPoly::from_eigenvalues({2, 2, 1, 1, Rat(1, 2), Rat(1, 2)}));
  Sampler rng(5);
  for (int t = 0; t < 10; ++t) {
    const auto p = rng.a3_point(9);
    CHECK(lfactor_gl4(GL4Rep::Wedge3, p) == lfactor_gl4(GL4Rep::Std, p.inverse()));
    check_charpoly(wedge2_rep(1, RatMatrix::diagonal({p[0], p[1], p[2], p[3]})), lfactor_gl4(GL4Rep::Wedge2, p));
  }
}

TEST_CASE("split GU(2,2) Euler factors") {
  const SatakePointA3 one({Rat(1), Rat(1), Rat(1), Rat(1)});
  CHECK(lfactor_gu22_split(GU22Rep::Std, 1, one) == power(kOneMinusT, 8));
  CHECK(lfactor_gu22_split(GU22Rep::Std, 2, one) == power(RecipPoly::from_eigenvalues({2}), 8));
  Sampler rng(6);
  for (int t = 0; t < 5; ++t) {
    const auto p = rng.a3_point(9);
    CHECK(lfactor_gu22_split(GU22Rep::Wedge2, 1, p) == lfactor_gl4(GL4Rep::Wedge2, p));
    CHECK(lfactor_gu22_split(GU22Rep::Std, 1, p) == lfactor_gl4(GL4Rep::Std, p) * lfactor_gl4(GL4Rep::Wedge3, p));
  }
}

TEST_CASE("inert GU(2,2) Euler factors") {
  const TwistedClass trivial{};
  CHECK(lfactor_gu22_inert(GU22Rep::Wedge2, trivial) == power(kOneMinusT, 5) * RecipPoly::from_eigenvalues({-1}));
  CHECK_THROWS_AS(lfactor_gu22_inert(GU22Rep::Std, TwistedClass{1, 2, 3, false}), MathError);

  Sampler rng(7);
  for (int t = 0; t < 20; ++t) {
    const Rat a = rng.nonzero_rat(9), b = rng.nonzero_rat(9);
    const TwistedClass cls{1, a, b};
    const RecipPoly w2 = lfactor_gu22_inert(GU22Rep::Wedge2, cls);
    const RecipPoly std8 = lfactor_gu22_inert(GU22Rep::Std, cls);
    CHECK(w2.degree() == 6);
    CHECK(std8.degree() == 8);
    CHECK(std8.is_even());
    // eigenvalues ab, a/b, b/a, 1/(ab) plus the +-1 pair of the swapped block
    CHECK(w2 == RecipPoly::from_eigenvalues({a * b, a / b, b / a, 1 / (a * b), 1, -1}));
    if (t < 4) {
      check_charpoly(exterior_square(cls.element()), w2);
      check_charpoly(induced_standard(cls.element()), std8);
    }
  }
}

TEST_CASE("GSp4 Euler factors") {
  CHECK(lfactor_gsp4(GSp4Rep::Spin, SatakePointC2(1, 1)) == power(kOneMinusT, 4));
  const RecipPoly s = lfactor_gsp4(GSp4Rep::Std, SatakePointC2(2, 1));
  CHECK(s == RecipPoly::from_eigenvalues({2, 2, Rat(1, 2), Rat(1, 2), 1}));
  CHECK(s.degree() == 5);
  CHECK(s.coeffs()[0] == 1);
  const TwistedClass cls{1, Rat(3), Rat(-2, 5)};
  const SatakePointC2 pt = gsp4_point(cls);
  CHECK(pt.a == Rat(-6, 5));
  CHECK(pt.b == Rat(-15, 2));
}

TEST_CASE("zeta factors") {
  const EulerContext split(Rat(1, 3), SplitType::Split), inert(Rat(1, 3), SplitType::Inert);
  CHECK(zeta_factors(split, ZetaKind::ZetaF) == kOneMinusT);
  CHECK(zeta_factors(split, ZetaKind::ZetaE) == kOneMinusT * kOneMinusT);
  CHECK(zeta_factors(split, ZetaKind::EpsEF) == kOneMinusT);
  CHECK(zeta_factors(inert, ZetaKind::ZetaF) == kOneMinusT);
  CHECK(zeta_factors(inert, ZetaKind::ZetaE) == RecipPoly("T", {1, 0, -1}));
  CHECK(zeta_factors(inert, ZetaKind::EpsEF) == RecipPoly("T", {1, 1}));
  CHECK_THROWS_AS(EulerContext(Rat(1), SplitType::Split), MathError);
  CHECK_THROWS_AS(EulerContext(Rat(-1, 2), SplitType::Inert), MathError);
}
