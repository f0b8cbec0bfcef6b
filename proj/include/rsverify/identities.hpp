#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rsverify/characters.hpp"
#include "rsverify/lgroup.hpp"
#include "rsverify/series.hpp"
#include "rsverify/substitution.hpp"

namespace rsv::verify {

/// First place where two sides of an identity disagree.
struct Discrepancy {
  std::string location;  // monomial, polynomial coefficient, or named item
  Rat lhs, rhs;
};

/// Empty on success.
using Outcome = std::optional<Discrepancy>;

/// Lexicographically first monomial (in exponent-vector order) whose
/// coefficients differ. Structural mismatch throws StructuralError.
Outcome first_discrepancy(const MSeries& lhs, const MSeries& rhs);
Outcome first_discrepancy(const RecipPoly& lhs, const RecipPoly& rhs, const std::string& label);

inline const std::vector<std::string> kXYZ{"X", "Y", "Z"};
inline const std::vector<std::string> kUV{"U", "V"};

// ------------------------------------------------------- inner integrals

/// Integral of psi(b y) over the shell |y| = |p|^{-k}, for b of valuation vb,
/// with vol(O) = 1 and q = |p|. Obtained as the difference of the two ball
/// integrals over p^{-k}O and p^{-k+1}O, each equal to its volume when psi(b.)
/// is trivial on the ball and 0 otherwise. Throws MathError for k <= 0.
Rat shell_integral_oracle(unsigned vb, int k, const Rat& q);

/// (1 - q x)(1 - x^{m+1})/(1 - x), where q x stands for |p|^S and x for
/// |p|^{S-1}. Throws MathError for x = 1.
Rat inner_integral_closed(unsigned m, const Rat& x, const Rat& q);

/// 1 + sum_{k>=1} shell(m, k) * (q x)^k; the sum is finite.
Rat inner_integral_shell_sum(unsigned m, const Rat& x, const Rat& q);

// ------------------------------------------------------------ GL4 side

/// (lead^{bound+1} - partner^{bound+1}) / (lead - partner), kept as its
/// bound+1 terms lead^{bound-i} partner^i; never divided out.
struct GeomFactorSpec {
  unsigned bound;
  QMonomial lead;
  QMonomial partner;
  std::vector<QMonomial> terms() const;
};

using CharacterFn = std::function<Rat(const WeightA3&)>;

/// Memoized A[n1,n2,n3] at one point.
CharacterFn characters_at(const SatakePointA3& pt);

/// sum A[l,m,n] Y^m ((1-(XZ)^{m+1})/(1-XZ)) ((X^{l+1}-(YZ)^{l+1})/(X-YZ))
///   ((Z^{n+1}-(XY)^{n+1})/(Z-XY)), truncated at D.
MSeries lhs_gl4_sum(const CharacterFn& chars, unsigned degree);
MSeries lhs_gl4_sum(const SatakePointA3& pt, unsigned degree);

/// (sum A[t,0,v] X^t Z^v)(sum A[0,u,0] Y^u), truncated at D.
MSeries rhs_character_product(const CharacterFn& chars, unsigned degree);

Outcome check_lemma_2_2(const SatakePointA3& pt, unsigned degree, bool inject_fault = false);

/// The three generating-function identities for Sym^t Std, the A[0,u,0]
/// series against (1-Y^2) L(wedge^2), and the A[t,0,v] series against
/// (1-XZ) L(Std) L(wedge^3).
Outcome check_littlewood_closures(const SatakePointA3& pt, unsigned degree, bool inject_fault = false);

/// The unramified GL4 local integral assembled from the torus weights and
/// the three inner integrals, with every power of |p| rewritten through
/// gl4_table(). The zeta(4s1) zeta(4s2) normalization, common to both sides
/// and not a power series in X, Y, Z, is divided out.
MSeries gl4_local_integral(const SatakePointA3& pt, const Rat& q, unsigned degree,
                           const CharacterFn& chars = {});

/// L(Std, 2w+s1-s2-1/2) L(wedge2, 2s1+2s2-1) L(wedge3, 2w-s1+s2-1/2)
///   / (zeta(4w) zeta(4w-1) zeta(4s1+4s2-2)), same normalization.
MSeries thm_2_1_rhs(const SatakePointA3& pt, const Rat& q, unsigned degree);

Outcome check_thm_2_1(const SatakePointA3& pt, const Rat& q, unsigned degree, bool inject_fault = false);

/// Expected rewritings asserted before the tables are used.
std::vector<std::pair<AffineForm, QMonomial>> gl4_expected_rewrites();
std::vector<std::pair<AffineForm, QMonomial>> gu22_expected_rewrites();

// ----------------------------------------------------------- GU(2,2) side

/// Which index of K^G[m,n] multiplies the spin fundamental weight.
enum class C2Dictionary { SpinFromN, SpinFromM };

/// Frozen after calibration against the GSp4 evaluation of the inert sum:
/// torus element diag(p^{m+n}, p^n, 1, p^{-m}) <-> n * spin + m * std.
inline constexpr C2Dictionary kWeightDictionary = C2Dictionary::SpinFromN;

WeightC2 kg_weight(unsigned m, unsigned n, C2Dictionary dict = kWeightDictionary);

/// sum V^n U^{2m} ((1-U^{2n+2})/(1-U^2)) ((1-V^{2m+2})/(1-V^2)) K^G[m,n].
MSeries lhs_gu22_inert_sum(const SatakePointC2& pt, unsigned degree,
                           C2Dictionary dict = kWeightDictionary);

/// lhs_gu22_inert_sum = L(Std, U^2) L(Spin, V) (1 - U^4).
Outcome check_bfg_identity(const SatakePointC2& pt, unsigned degree,
                           C2Dictionary dict = kWeightDictionary, bool inject_fault = false);

/// For the twisted class (1, diag(a,b,1/b,1/a)) x theta and its GSp4 point:
/// wedge^2 reciprocal = Spin reciprocal * (1 - T^2), and
/// Std reciprocal * (1 - T^2) = (GSp4 Std reciprocal)(T^2); plus the
/// degree (6, 8) and parity assertions.
Outcome check_prop_gsp4L(const Rat& a, const Rat& b, bool inject_fault = false);

/// Inert-place unramified GU(2,2) identity in U = |p|^{2w-1/2}, V = |p|^{3s-1}.
Outcome check_thm_3_2_inert(const Rat& a, const Rat& b, const Rat& q, unsigned degree,
                            bool inject_fault = false);

struct ArgumentAuditRow {
  std::string factor;
  AffineForm gl4_argument;
  AffineForm specialized;
  AffineForm gu22_argument;
  bool matches;
};

/// Specializes every GL4 factor argument along s1 = s2 = exponent * s and
/// compares with the split-place GU(2,2) argument.
std::vector<ArgumentAuditRow> split_argument_audit(const Rat& exponent = Rat(3, 4));

/// Split-place identity obtained from the GL4 computation. lambda must be 1.
Outcome check_thm_3_2_split(const SatakePointA3& pt, const Rat& lambda, const Rat& q, unsigned degree,
                            bool inject_fault = false);

}  // namespace rsv::verify
