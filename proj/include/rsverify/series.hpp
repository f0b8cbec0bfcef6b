#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsverify/rational.hpp"

namespace rsv {

/// Product of named formal variables with non-negative exponents.
/// Variables that are absent carry exponent 0.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<std::pair<const std::string, unsigned>> exps);

  static Monomial var(const std::string& name, unsigned exponent = 1);

  unsigned exponent(const std::string& name) const;
  unsigned total_degree() const;
  bool is_one() const { return exps_.empty(); }
  const std::map<std::string, unsigned>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& other) const;
  Monomial pow(unsigned k) const;
  bool operator==(const Monomial& other) const = default;

  /// e.g. "X^2*Z", "1" for the empty monomial.
  std::string str() const;

 private:
  std::map<std::string, unsigned> exps_;
};

/// Multivariate power series with exact coefficients, truncated at a total
/// degree. Coefficients of monomials above the truncation degree are unknown
/// and never stored; zero coefficients are never stored either.
class MSeries {
 public:
  using Exponents = std::vector<unsigned>;

  MSeries(std::vector<std::string> vars, unsigned degree);

  static MSeries constant(std::vector<std::string> vars, unsigned degree, const Rat& c);
  static MSeries term(std::vector<std::string> vars, unsigned degree, const Monomial& m,
                      const Rat& c = 1);

  const std::vector<std::string>& vars() const { return vars_; }
  unsigned degree() const { return degree_; }
  const std::map<Exponents, Rat>& terms() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of `m`; throws MathError when deg m exceeds the truncation
  /// degree and StructuralError when `m` uses a foreign variable.
  Rat coeff(const Monomial& m) const;

  /// Adds c * x^e. Terms of total degree above the truncation are discarded.
  void add_term(const Exponents& e, const Rat& c);
  void add_term(const Monomial& m, const Rat& c) { add_term(exponents_of(m), c); }

  Exponents exponents_of(const Monomial& m) const;
  Monomial monomial_of(const Exponents& e) const;

  MSeries operator+(const MSeries& other) const;
  MSeries operator-(const MSeries& other) const;
  MSeries operator*(const MSeries& other) const;
  MSeries operator*(const Rat& scalar) const;
  MSeries& operator+=(const MSeries& other);
  MSeries& operator*=(const MSeries& other);

  bool operator==(const MSeries& other) const;

  /// Ring homomorphism x_i -> scale_i * m_i into a new variable set. Every
  /// image monomial must have degree >= 1 and `new_degree` may not exceed the
  /// current truncation, so the result is exact up to `new_degree`.
  MSeries substitute(std::vector<std::string> new_vars, unsigned new_degree,
                     const std::map<std::string, std::pair<Rat, Monomial>>& images) const;

  std::string str() const;

 private:
  void require_compatible(const MSeries& other) const;

  std::vector<std::string> vars_;
  unsigned degree_;
  std::map<Exponents, Rat> coeffs_;
};

/// Euler factor stored as its reciprocal polynomial 1 + c_1 T + ... + c_d T^d.
class RecipPoly {
 public:
  /// Throws MathError when the constant term is not 1.
  RecipPoly(std::string var, std::vector<Rat> coeffs);

  /// prod_i (1 - beta_i T)
  static RecipPoly from_eigenvalues(const std::vector<Rat>& eigenvalues, std::string var = "T");
  static RecipPoly one(std::string var = "T");

  const std::string& var() const { return var_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  Rat operator()(const Rat& t) const;

  /// True iff every odd-degree coefficient vanishes.
  bool is_even() const;
  /// p(T) -> p(T^2)
  RecipPoly in_square() const;

  RecipPoly operator*(const RecipPoly& other) const;
  bool operator==(const RecipPoly& other) const = default;

  std::string str() const;

 private:
  void trim();

  std::string var_;
  std::vector<Rat> coeffs_;
};

/// Expansion of 1 / p(T) after T -> scale * m, truncated at `degree`.
/// Throws MathError when `m` has degree 0 (the series would not be
/// determined by finitely many terms).
MSeries series_from_recip(const RecipPoly& p, const Monomial& m, const Rat& scale,
                          std::vector<std::string> vars, unsigned degree);

/// p(T) itself after T -> scale * m, truncated at `degree`.
MSeries series_from_poly(const RecipPoly& p, const Monomial& m, const Rat& scale,
                         std::vector<std::string> vars, unsigned degree);

inline MSeries series_add(const MSeries& a, const MSeries& b) { return a + b; }
inline MSeries series_mul(const MSeries& a, const MSeries& b) { return a * b; }
inline Rat series_coeff(const MSeries& f, const Monomial& m) { return f.coeff(m); }

}  // namespace rsv
