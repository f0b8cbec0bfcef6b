#include "rsverify/lgroup.hpp"

#include <array>
#include <tuple>

namespace rsv {

namespace {

constexpr std::array<std::pair<std::size_t, std::size_t>, 6> kWedgeBasis{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

}  // namespace

Rep4Matrix phi4() {
  Rep4Matrix m(4);
  m(0, 3) = 1;
  m(1, 2) = -1;
  m(2, 1) = 1;
  m(3, 0) = -1;
  return m;
}

std::pair<Rat, Rep4Matrix> theta_action(const Rat& lambda, const Rep4Matrix& g) {
  const Rat det = g.determinant();
  if (det == 0) throw MathError("theta action needs an invertible matrix");
  const Rep4Matrix phi = phi4();
  return {lambda * det, phi * g.inverse().transpose() * phi.inverse()};
}

LGroupElement LGroupElement::operator*(const LGroupElement& o) const {
  // (x, t)(y, s) = (x * theta^t(y), t + s)
  Rat l = o.lambda;
  Rep4Matrix h = o.g;
  if (twisted) std::tie(l, h) = theta_action(o.lambda, o.g);
  return {lambda * l, g * h, twisted != o.twisted};
}

Rep6Matrix wedge2_rep(const Rat& lambda, const Rep4Matrix& g) {
  Rep6Matrix m(6);
  for (std::size_t r = 0; r < 6; ++r) {
    const auto [i, j] = kWedgeBasis[r];
    for (std::size_t c = 0; c < 6; ++c) {
      const auto [k, l] = kWedgeBasis[c];
      m(r, c) = lambda * (g(i, k) * g(j, l) - g(i, l) * g(j, k));
    }
  }
  return m;
}

Rep6Matrix a_matrix() {
  Rep6Matrix a = Rep6Matrix::identity(6);
  a(2, 2) = 0;
  a(3, 3) = 0;
  a(2, 3) = 1;
  a(3, 2) = 1;
  return a;
}

Rep6Matrix exterior_square(const LGroupElement& x) {
  Rep6Matrix m = wedge2_rep(x.lambda, x.g);
  return x.twisted ? m * a_matrix() : m;
}

Rep8Matrix induced_standard(const LGroupElement& x) {
  const auto [tl, tg] = theta_action(x.lambda, x.g);
  const Rep4Matrix top = x.g * x.lambda;
  const Rep4Matrix bottom = tg * tl;
  Rep8Matrix m(8);
  // diag(top, bottom), then the summand swap on the theta coset
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (x.twisted) {
        m(i, j + 4) = top(i, j);
        m(i + 4, j) = bottom(i, j);
      } else {
        m(i, j) = top(i, j);
        m(i + 4, j + 4) = bottom(i, j);
      }
    }
  return m;
}

Rep4Matrix TwistedClass::g() const { return Rep4Matrix::diagonal({a, b, 1 / b, 1 / a}); }

SatakePointC2 gsp4_point(const TwistedClass& cls) { return SatakePointC2(cls.a * cls.b, cls.a / cls.b); }

RecipPoly lfactor_gl4(GL4Rep rep, const SatakePointA3& pt) {
  std::vector<Rat> ev;
  switch (rep) {
    case GL4Rep::Std:
      for (std::size_t i = 0; i < 4; ++i) ev.push_back(pt[i]);
      break;
    case GL4Rep::Wedge2:
      for (const auto& [i, j] : kWedgeBasis) ev.push_back(pt[i] * pt[j]);
      break;
    case GL4Rep::Wedge3:
      for (std::size_t skip = 0; skip < 4; ++skip) {
        Rat p = 1;
        for (std::size_t i = 0; i < 4; ++i)
          if (i != skip) p *= pt[i];
        ev.push_back(p);
      }
      break;
  }
  return RecipPoly::from_eigenvalues(ev);
}

RecipPoly lfactor_gu22_split(GU22Rep rep, const Rat& lambda, const SatakePointA3& pt) {
  auto scaled = [&](GL4Rep r) {
    const auto base = lfactor_gl4(r, pt);
    std::vector<Rat> c = base.coeffs();
    Rat s = 1;
    for (auto& x : c) {
      x *= s;
      s *= lambda;
    }
    return RecipPoly(base.var(), std::move(c));
  };
  if (rep == GU22Rep::Wedge2) return scaled(GL4Rep::Wedge2);
  return scaled(GL4Rep::Std) * scaled(GL4Rep::Wedge3);
}

RecipPoly lfactor_gu22_inert(GU22Rep rep, const TwistedClass& cls) {
  if (!cls.twisted) throw MathError("inert Euler factor needs a class on the theta coset");
  const LGroupElement x = cls.element();
  return rep == GU22Rep::Wedge2 ? exterior_square(x).reciprocal_charpoly()
                                : induced_standard(x).reciprocal_charpoly();
}

RecipPoly lfactor_gsp4(GSp4Rep rep, const SatakePointC2& pt) {
  const Rat& a = pt.a;
  const Rat& b = pt.b;
  if (rep == GSp4Rep::Spin) return RecipPoly::from_eigenvalues({a, b, 1 / b, 1 / a});
  return RecipPoly::from_eigenvalues({a * b, a / b, b / a, 1 / (a * b), Rat(1)});
}

EulerContext::EulerContext(Rat q_, SplitType s) : q(std::move(q_)), split(s) {
  if (!(q > 0 && q < 1)) throw MathError("|p| must lie in (0, 1)");
}

RecipPoly zeta_factors(const EulerContext& ctx, ZetaKind which) {
  const bool split = ctx.split == SplitType::Split;
  switch (which) {
    case ZetaKind::ZetaF:
      return RecipPoly("T", {Rat(1), Rat(-1)});
    case ZetaKind::ZetaE:
      return split ? RecipPoly("T", {Rat(1), Rat(-2), Rat(1)}) : RecipPoly("T", {Rat(1), Rat(0), Rat(-1)});
    case ZetaKind::EpsEF:
      return split ? RecipPoly("T", {Rat(1), Rat(-1)}) : RecipPoly("T", {Rat(1), Rat(1)});
  }
  throw MathError("unknown zeta factor");
}

}  // namespace rsv
