#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace rsv::ff {

using Elem = std::uint8_t;

/// F_p or F_{p^2} with p small. Elements of F_{p^2} are a + b t encoded as
/// a + b p, where t^2 = t + 1 for p = 2 and t^2 = (least non-residue) otherwise.
class FiniteField {
 public:
  /// Throws std::invalid_argument unless p is a prime with p^degree <= 25
  /// and degree is 1 or 2.
  FiniteField(unsigned p, unsigned degree);

  unsigned p() const { return p_; }
  unsigned degree() const { return degree_; }
  unsigned size() const { return q_; }

  Elem add(Elem x, Elem y) const { return add_[x * q_ + y]; }
  Elem mul(Elem x, Elem y) const { return mul_[x * q_ + y]; }
  Elem neg(Elem x) const { return neg_[x]; }
  Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }
  /// Throws std::domain_error for 0.
  Elem inv(Elem x) const;
  /// Frobenius x -> x^p; the identity on F_p.
  Elem conj(Elem x) const { return conj_[x]; }
  /// Image of an integer in the prime field.
  Elem from_int(long n) const;
  bool in_prime_field(Elem x) const { return x < p_; }

  std::string str(Elem x) const;
  bool operator==(const FiniteField& o) const { return p_ == o.p_ && degree_ == o.degree_; }

 private:
  unsigned p_, degree_, q_;
  std::vector<Elem> add_, mul_, neg_, inv_, conj_;
};

/// Process-wide instance, so matrices referring to it may be kept freely.
const FiniteField& shared_field(unsigned p, unsigned degree);

bool is_prime(unsigned n);

using Vec4 = std::array<Elem, 4>;

/// 4x4 matrix over a finite field; row vectors act on the left (v -> v g).
class FqMatrix {
 public:
  explicit FqMatrix(const FiniteField& f) : f_(&f) { a_.fill(0); }
  static FqMatrix identity(const FiniteField& f);
  /// Permutation matrix with P e_j = e_{sigma(j)} (1-based images).
  static FqMatrix permutation(const FiniteField& f, const std::array<int, 4>& sigma);
  /// Entries given as integers, reduced into the prime field.
  static FqMatrix from_ints(const FiniteField& f, const std::array<long, 16>& entries);

  const FiniteField& field() const { return *f_; }
  Elem operator()(int i, int j) const { return a_[4 * i + j]; }
  Elem& operator()(int i, int j) { return a_[4 * i + j]; }
  const std::array<Elem, 16>& data() const { return a_; }

  FqMatrix operator*(const FqMatrix& o) const;
  bool operator==(const FqMatrix& o) const { return a_ == o.a_; }
  bool operator<(const FqMatrix& o) const { return a_ < o.a_; }

  /// Entrywise Frobenius then transpose.
  FqMatrix conj_transpose() const;
  bool invertible() const;
  Vec4 row(int i) const { return {a_[4 * i], a_[4 * i + 1], a_[4 * i + 2], a_[4 * i + 3]}; }

  std::string str() const;

 private:
  const FiniteField* f_;
  std::array<Elem, 16> a_;
};

Vec4 row_times(const FiniteField& f, const Vec4& v, const FqMatrix& g);

/// Reduced row echelon form of the span of `rows`, flattened; two lists span
/// the same subspace iff their keys agree.
std::vector<Elem> subspace_key(const FiniteField& f, std::vector<Vec4> rows);

}  // namespace rsv::ff
