#pragma once

#include <utility>

#include "rsverify/characters.hpp"
#include "rsverify/matrix.hpp"
#include "rsverify/series.hpp"

namespace rsv {

/// Element (lambda, g) x theta^e of the L-group (GL1 x GL4) x| Gal(E/F).
struct LGroupElement {
  Rat lambda = 1;
  Rep4Matrix g = Rep4Matrix::identity(4);
  bool twisted = false;

  LGroupElement operator*(const LGroupElement& o) const;
  bool operator==(const LGroupElement& o) const = default;
};

/// The antidiagonal matrix with entries 1, -1, 1, -1 read from the top right.
Rep4Matrix phi4();

/// (lambda, g) -> (lambda det g, Phi4 g^{-T} Phi4^{-1}). Throws MathError for singular g.
std::pair<Rat, Rep4Matrix> theta_action(const Rat& lambda, const Rep4Matrix& g);

/// lambda * wedge^2(g) in the basis v1^v2, v1^v3, v1^v4, v2^v3, v2^v4, v3^v4.
Rep6Matrix wedge2_rep(const Rat& lambda, const Rep4Matrix& g);

/// The intertwiner diag(1_2, [[0,1],[1,0]], 1_2), trace 4.
Rep6Matrix a_matrix();

/// Exterior square of the L-group: rho0(x) on the identity coset, rho0(x) A
/// on the theta coset.
Rep6Matrix exterior_square(const LGroupElement& x);

/// Standard representation induced from the identity component, acting on
/// V4 + V4: x acts by diag(lambda g, theta(x)'s lambda g), theta swaps the
/// two summands.
Rep8Matrix induced_standard(const LGroupElement& x);

/// Frobenius class at an inert place in normal form (lambda, diag(a,b,1/b,1/a)) x theta.
struct TwistedClass {
  Rat lambda = 1;
  Rat a = 1, b = 1;
  bool twisted = true;

  Rep4Matrix g() const;
  LGroupElement element() const { return {lambda, g(), twisted}; }
};

/// Satake class of the GSp4 representation paired with a twisted class:
/// the spin eigenvalues are the eigenvalues ab, a/b, b/a, 1/(ab) of the twisted
/// exterior square off the (theta-swapped) trivial block.
SatakePointC2 gsp4_point(const TwistedClass& cls);

enum class GL4Rep { Std, Wedge2, Wedge3 };
enum class GU22Rep { Std, Wedge2 };
enum class GSp4Rep { Spin, Std };

/// prod (1 - beta T) over the eigenvalues of the chosen fundamental representation.
RecipPoly lfactor_gl4(GL4Rep rep, const SatakePointA3& pt);

/// Split place: lambda x wedge^2 (degree 6), or (lambda x Std)(lambda x wedge^3) (degree 8).
RecipPoly lfactor_gu22_split(GU22Rep rep, const Rat& lambda, const SatakePointA3& pt);

/// Inert place: det(1 - rho(cls) T) for rho the exterior square (degree 6)
/// or the induced standard representation (degree 8). Throws MathError
/// for a class on the identity coset.
RecipPoly lfactor_gu22_inert(GU22Rep rep, const TwistedClass& cls);

/// Spin: a, b, 1/b, 1/a. Std: ab, a/b, b/a, 1/(ab), 1.
RecipPoly lfactor_gsp4(GSp4Rep rep, const SatakePointC2& pt);

enum class SplitType { Split, Inert };

struct EulerContext {
  Rat q;  // |p|, in (0, 1)
  SplitType split = SplitType::Split;
  EulerContext(Rat q_, SplitType s);
};

enum class ZetaKind { ZetaF, ZetaE, EpsEF };

/// Reciprocals in the base-field variable T = |p|^s:
/// zeta_F -> 1-T; zeta_E -> (1-T)^2 split, 1-T^2 inert; L(eps) -> 1-T split, 1+T inert.
RecipPoly zeta_factors(const EulerContext& ctx, ZetaKind which);

}  // namespace rsv
