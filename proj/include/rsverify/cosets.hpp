#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsverify/finite_field.hpp"

namespace rsv::cosets {

using ff::FiniteField;
using ff::FqMatrix;

/// Requested field is too large for brute-force enumeration.
class ResourceGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DoubleCoset {
  /// Empty only for a coset that no listed representative reaches and for
  /// which no matrix was constructed.
  std::optional<FqMatrix> representative;
  std::string witness;        // the Q-coset invariant (flag or isotropic line) it was grown from
  std::uint64_t q_cosets = 0;  // right Q-cosets inside Q g P
  std::uint64_t size = 0;      // |Q| * q_cosets
};

struct ListedRepresentative {
  std::string label;
  FqMatrix matrix;
  int coset = -1;  // index into CosetDecomposition::cosets
};

struct CosetDecomposition {
  std::string group;
  unsigned p = 0;
  std::vector<DoubleCoset> cosets;
  std::uint64_t total = 0;  // group order from the closed formula
  std::uint64_t order_P = 0, order_Q = 0;          // by enumeration
  std::uint64_t formula_P = 0, formula_Q = 0;      // Levi times unipotent radical
  std::vector<ListedRepresentative> listed;
  /// Double coset sizes from classifying every group element; filled only
  /// where the group is small enough to list (GL4(F_2), GU4(2)).
  std::vector<std::uint64_t> listing_sizes;
  std::uint64_t listed_order = 0;  // group order counted by that listing

  std::uint64_t size_sum() const;
  /// Every listed representative lies in its own coset and every coset holds one.
  bool listed_distinct() const;
};

std::uint64_t gl4_order(unsigned p);
/// |GU_4(p)| including similitudes in F_p^x.
std::uint64_t gu4_order(unsigned p);

/// Q\GL4/P over F_p for P = Stab<b3,b4>, Q = Stab(<b4> in <b2,b3,b4>), right
/// action on row vectors. Requires p in {2, 3}.
CosetDecomposition enumerate_gl4_double_cosets(unsigned p, bool inject_fault = false);

/// gamma_1 = (123), gamma_2 = (243).
FqMatrix gamma(const FiniteField& f, int i);

/// Whether x in P fixes the right coset Q gamma.
bool stabilizes(const FqMatrix& gamma, const FqMatrix& x);

/// Every element of the unipotent radical of P_{3,1} (i = 1) or P_{1,3}
/// (i = 2) fixes Q gamma_i. The fault pairs each gamma with the other radical.
bool check_stabilizer_unipotent(int i, unsigned p, bool inject_fault = false);

/// Elements of the unipotent radical used for gamma_i.
std::vector<FqMatrix> unipotent_radical(const FiniteField& f, int i);

/// Generators of P(F_p) (elementary matrices and diagonals in its shape).
std::vector<FqMatrix> gl4_P_generators(const FiniteField& f);

/// The antidiagonal form (1, 1, -1, -1 read from the top right).
FqMatrix j4(const FiniteField& f);

/// Q\GU(2,2)/P over F_{p^2}/F_p, with g J4 g* = nu J4, P = Stab<f1,f2>,
/// Q = Stab<f1> in the basis e1, e2, f2, f1. Requires p = 2.
CosetDecomposition enumerate_gu4_double_cosets(unsigned p, bool inject_fault = false);

std::string describe(const CosetDecomposition& d);

}  // namespace rsv::cosets
