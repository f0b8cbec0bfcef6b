#include "doctest.h"

#include <algorithm>

#include "rsverify/identities.hpp"
#include "rsverify/sampling.hpp"

using namespace rsv;
using namespace rsv::verify;

namespace {

// Direct enumeration of every (l,m,n) and every term of the three
// telescoped factors, without the GeomFactorSpec machinery.
MSeries gl4_sum_oracle(const SatakePointA3& pt, unsigned d) {
  MSeries out(kXYZ, d);
  for (unsigned l = 0; l <= d; ++l)
    for (unsigned m = 0; l + m <= d; ++m)
      for (unsigned n = 0; l + m + n <= d; ++n) {
        const Rat k = schur_A3({l, m, n}, pt);
        for (unsigned a = 0; a <= m; ++a)
          for (unsigned b = 0; b <= l; ++b)
            for (unsigned c = 0; c <= n; ++c) out.add_term({a + l - b + c, m + b + c, a + b + n - c}, k);
      }
  return out;
}

MSeries gu_sum_oracle(const SatakePointC2& pt, unsigned d) {
  MSeries out(kUV, d);
  for (unsigned m = 0; 2 * m <= d; ++m)
    for (unsigned n = 0; 2 * m + n <= d; ++n) {
      const Rat k = char_C2_total(WeightC2{n, m}, pt);
      for (unsigned i = 0; i <= n; ++i)
        for (unsigned j = 0; j <= m; ++j) out.add_term({2 * m + 2 * i, n + 2 * j}, k);
    }
  return out;
}

const SatakePointA3 kOne({Rat(1), Rat(1), Rat(1), Rat(1)});

}  // namespace

TEST_CASE("shell integrals") {
  const Rat q(1, 3);
  CHECK(shell_integral_oracle(0, 1, q) == -1);
  CHECK(1 + shell_integral_oracle(0, 1, q) * q * Rat(1, 2) == inner_integral_closed(0, Rat(1, 2), q));
  CHECK(shell_integral_oracle(2, 5, q) == 0);
  // full shell mass q^{-k} - q^{-(k-1)} in the regime k <= vb
  CHECK(shell_integral_oracle(3, 2, q) == 9 - 3);
  CHECK(shell_integral_oracle(3, 4, q) == -27);
  CHECK_THROWS_AS(shell_integral_oracle(1, 0, q), MathError);
  CHECK_THROWS_AS(shell_integral_oracle(1, -2, q), MathError);
}

TEST_CASE("inner integral closed form") {
  CHECK(inner_integral_closed(1, Rat(1, 2), Rat(1, 3)) == Rat(5, 4));
  CHECK(inner_integral_shell_sum(1, Rat(1, 2), Rat(1, 3)) == Rat(5, 4));
  Sampler rng(1);
  for (int t = 0; t < 10; ++t) {
    Rat x = rng.nonzero_rat(15);
    if (x == 1) continue;
    const Rat q = rng.unit_interval(15);
    CHECK(inner_integral_closed(0, x, q) == 1 - q * x);
    for (unsigned m = 0; m <= 6; ++m) {
      Rat geometric = 0;
      for (unsigned i = 0; i <= m; ++i) geometric += pow(x, static_cast<int>(i));
      CHECK(inner_integral_closed(m, x, q) == (1 - q * x) * geometric);
      CHECK(inner_integral_shell_sum(m, x, q) == inner_integral_closed(m, x, q));
    }
  }
  CHECK_THROWS_AS(inner_integral_closed(2, Rat(1), Rat(1, 2)), MathError);
}

TEST_CASE("telescoped factors expand term by term") {
  const GeomFactorSpec g{3, QMonomial{0, {1, 0, 0}}, QMonomial{0, {0, 1, 1}}};
  const auto terms = g.terms();
  REQUIRE(terms.size() == 4);
  CHECK(terms.front() == QMonomial{0, {3, 0, 0}});
  CHECK(terms.back() == QMonomial{0, {0, 3, 3}});
}

TEST_CASE("GL4 character sum") {
  Sampler rng(2);
  const auto pt = rng.a3_point(9);
  CHECK(lhs_gl4_sum(pt, 0) == MSeries::constant(kXYZ, 0, 1));
  const MSeries d1 = lhs_gl4_sum(pt, 1);
  CHECK(d1.coeff(Monomial::var("Y")) == schur_A3({0, 1, 0}, pt));
  CHECK(d1.coeff(Monomial::var("X")) == schur_A3({1, 0, 0}, pt));
  for (int t = 0; t < 3; ++t) {
    const auto p = rng.a3_point(9);
    CHECK(lhs_gl4_sum(p, 6) == gl4_sum_oracle(p, 6));
  }
}

TEST_CASE("character product identity") {
  Sampler rng(3);
  CHECK(!check_lemma_2_2(rng.a3_point(9), 0));
  for (int t = 0; t < 20; ++t) {
    const auto pt = rng.a3_point(20);
    CHECK(!check_lemma_2_2(pt, 6));
  }
  const auto pt = rng.a3_point(9);
  const Outcome bad = check_lemma_2_2(pt, 6, true);
  REQUIRE(bad);
  CHECK(!bad->location.empty());
  CHECK(bad->lhs != bad->rhs);
}

TEST_CASE("character product identity is symmetric in the point") {
  Sampler rng(4);
  const auto pt = rng.a3_point(9);
  const auto a = pt.alpha();
  const SatakePointA3 swapped({a[2], a[0], a[3], a[1]});
  CHECK(lhs_gl4_sum(pt, 5) == lhs_gl4_sum(swapped, 5));
  CHECK(check_lemma_2_2(pt, 5, true)->location == check_lemma_2_2(swapped, 5, true)->location);
}

TEST_CASE("generating-function closures") {
  Sampler rng(5);
  const auto pt = rng.a3_point(9);
  const auto chars = characters_at(pt);
  const MSeries prod = rhs_character_product(chars, 2);
  const Rat e1 = schur_A3({1, 0, 0}, pt), e3 = schur_A3({0, 0, 1}, pt);
  CHECK(prod.coeff(Monomial::var("X")) == e1);
  CHECK(prod.coeff(Monomial{{"X", 1}, {"Z", 1}}) == e1 * e3 - 1);
  CHECK(schur_A3({1, 0, 1}, pt) == e1 * e3 - 1);
  for (int t = 0; t < 5; ++t) CHECK(!check_littlewood_closures(rng.a3_point(20), 10));
  CHECK(check_littlewood_closures(pt, 4, true));
}

TEST_CASE("unramified GL4 integral") {
  CHECK(!check_thm_2_1(kOne, Rat(1, 2), 6));
  Sampler rng(6);
  const auto pt = rng.a3_point(9);
  const Rat q = rng.unit_interval(20);
  const MSeries lhs = gl4_local_integral(pt, q, 3);
  CHECK(lhs.coeff(Monomial{}) == 1);
  CHECK(thm_2_1_rhs(pt, q, 3).coeff(Monomial{}) == 1);
  for (int t = 0; t < 4; ++t) CHECK(!check_thm_2_1(rng.a3_point(20), rng.unit_interval(20), 7));
  const Outcome bad = check_thm_2_1(pt, q, 4, true);
  REQUIRE(bad);
  CHECK(bad->lhs != bad->rhs);
}

TEST_CASE("expected table rewrites hold") {
  CHECK_NOTHROW(gl4_table().self_check(gl4_expected_rewrites()));
  CHECK_NOTHROW(gu22_table().self_check(gu22_expected_rewrites()));
}

TEST_CASE("GU(2,2) character sum") {
  Sampler rng(7);
  const auto pt = rng.c2_point(9);
  CHECK(lhs_gu22_inert_sum(pt, 0) == MSeries::constant(kUV, 0, 1));
  const MSeries s = lhs_gu22_inert_sum(pt, 2);
  const auto K = [&](unsigned m, unsigned n) { return char_C2_total(kg_weight(m, n), pt); };
  CHECK(s.coeff(Monomial::var("V")) == K(0, 1));
  CHECK(s.coeff(Monomial::var("U", 2)) == K(1, 0));
  CHECK(kg_weight(2, 3) == WeightC2{3, 2});
  CHECK(kg_weight(2, 3, C2Dictionary::SpinFromM) == WeightC2{2, 3});
  for (int t = 0; t < 3; ++t) {
    const auto p = rng.c2_point(9);
    CHECK(lhs_gu22_inert_sum(p, 8) == gu_sum_oracle(p, 8));
  }
}

TEST_CASE("GSp4 evaluation of the inert sum") {
  const SatakePointC2 one(1, 1);
  CHECK(!check_bfg_identity(one, 4));
  Sampler rng(8);
  for (int t = 0; t < 10; ++t) CHECK(!check_bfg_identity(rng.c2_point(20), 8));
  const auto pt = rng.c2_point(9);
  const MSeries s = lhs_gu22_inert_sum(pt, 1);
  CHECK(s.coeff(Monomial::var("V")) == pt.a + pt.b + 1 / pt.a + 1 / pt.b);
  CHECK(check_bfg_identity(pt, 4, kWeightDictionary, true));
}

TEST_CASE("weight dictionary calibration singles out one choice") {
  Sampler rng(9);
  bool other_fails = false;
  for (int t = 0; t < 5; ++t) {
    const auto pt = rng.c2_point(20);
    CHECK(!check_bfg_identity(pt, 4, C2Dictionary::SpinFromN));
    other_fails = other_fails || check_bfg_identity(pt, 4, C2Dictionary::SpinFromM).has_value();
  }
  CHECK(other_fails);
}

TEST_CASE("inert Euler factor relations") {
  CHECK(!check_prop_gsp4L(1, 1));
  const TwistedClass one{};
  const RecipPoly w = lfactor_gu22_inert(GU22Rep::Wedge2, one);
  const RecipPoly t4 = RecipPoly::from_eigenvalues({1, 1, 1, 1});
  CHECK(w == t4 * RecipPoly("T", {1, 0, -1}));
  Sampler rng(10);
  for (int t = 0; t < 50; ++t) CHECK(!check_prop_gsp4L(rng.nonzero_rat(20), rng.nonzero_rat(20)));
  const Outcome bad = check_prop_gsp4L(Rat(2), Rat(3), true);
  REQUIRE(bad);
  CHECK(bad->location.find("wedge2") != std::string::npos);
}

TEST_CASE("inert GU(2,2) integral") {
  CHECK(!check_thm_3_2_inert(1, 1, Rat(1, 2), 4));
  Sampler rng(11);
  for (int t = 0; t < 5; ++t)
    CHECK(!check_thm_3_2_inert(rng.nonzero_rat(20), rng.nonzero_rat(20), rng.unit_interval(20), 6));
  CHECK(check_thm_3_2_inert(Rat(2), Rat(3), Rat(1, 5), 4, true));
  CHECK_THROWS_AS(check_thm_3_2_inert(1, 1, Rat(2), 4), MathError);
}

TEST_CASE("split argument audit") {
  const auto rows = split_argument_audit();
  CHECK(rows.size() == 8);
  for (const auto& r : rows) CHECK_MESSAGE(r.matches, r.factor);
  const auto s = AffineForm::param("s");
  bool saw_wedge = false, saw_zeta = false;
  for (const auto& r : rows) {
    if (r.factor.find("L(wedge2)") == 0) {
      saw_wedge = true;
      CHECK(r.specialized == s * 3 - Rat(1));
    }
    if (r.factor.find("zeta(4s1+4s2-2)") == 0) {
      saw_zeta = true;
      CHECK(r.specialized == s * 6 - Rat(2));
    }
  }
  CHECK(saw_wedge);
  CHECK(saw_zeta);
  const auto wrong = split_argument_audit(Rat(2, 3));
  CHECK(std::any_of(wrong.begin(), wrong.end(), [](const ArgumentAuditRow& r) { return !r.matches; }));
}

TEST_CASE("split GU(2,2) integral") {
  Sampler rng(12);
  CHECK(!check_thm_3_2_split(kOne, 1, Rat(1, 2), 5));
  for (int t = 0; t < 3; ++t) CHECK(!check_thm_3_2_split(rng.a3_point(20), 1, rng.unit_interval(20), 6));
  CHECK_THROWS_AS(check_thm_3_2_split(kOne, 2, Rat(1, 2), 4), MathError);
  const Outcome bad = check_thm_3_2_split(kOne, 1, Rat(1, 2), 4, true);
  REQUIRE(bad);
  CHECK(bad->location.find("argument audit") == 0);
}

TEST_CASE("first discrepancy is the lexicographically least monomial") {
  MSeries a(kXYZ, 3), b(kXYZ, 3);
  a.add_term({0, 2, 0}, 1);
  a.add_term({1, 0, 0}, 2);
  b.add_term({0, 2, 0}, 3);
  b.add_term({1, 0, 0}, 5);
  const Outcome d = first_discrepancy(a, b);
  REQUIRE(d);
  CHECK(d->location == "Y^2");
  CHECK(d->lhs == 1);
  CHECK(d->rhs == 3);
  CHECK(!first_discrepancy(a, a));
  CHECK_THROWS_AS(first_discrepancy(a, MSeries(kXYZ, 2)), StructuralError);
  const Outcome p = first_discrepancy(RecipPoly("T", {1, 2}), RecipPoly("T", {1, 2, 3}), "f");
  REQUIRE(p);
  CHECK(p->lhs == 0);
  CHECK(p->rhs == 3);
}
