#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rsverify/rational.hpp"
#include "rsverify/series.hpp"

namespace rsv {

/// A substitution table that cannot express one of its own entries.
class ConfigurationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// c0 + sum_p c_p * p over named complex parameters (w, s1, s2, s, ...).
class AffineForm {
 public:
  AffineForm() = default;
  explicit AffineForm(Rat constant, std::map<std::string, Rat> coeffs = {});
  static AffineForm param(const std::string& name, const Rat& coeff = 1);

  const Rat& constant() const { return constant_; }
  Rat coeff(const std::string& name) const;
  const std::map<std::string, Rat>& coeffs() const { return coeffs_; }

  AffineForm operator+(const AffineForm& o) const;
  AffineForm operator-(const AffineForm& o) const;
  AffineForm operator*(const Rat& s) const;
  AffineForm operator+(const Rat& c) const { return *this + AffineForm(c); }
  AffineForm operator-(const Rat& c) const { return *this - AffineForm(c); }
  bool operator==(const AffineForm& o) const = default;

  /// Replace parameters by affine forms; unmapped parameters stay.
  AffineForm substitute(const std::map<std::string, AffineForm>& images) const;

  std::string str() const;

 private:
  void prune();

  Rat constant_ = 0;
  std::map<std::string, Rat> coeffs_;
};

/// q^qpower * prod var_i^exp_i with possibly negative exponents.
struct QMonomial {
  int q_power = 0;
  std::vector<int> exponents;

  QMonomial operator*(const QMonomial& o) const;
  QMonomial pow(unsigned k) const;
  bool is_polynomial() const;
  /// Throws ConfigurationError for a negative exponent.
  Monomial monomial(const std::vector<std::string>& vars) const;
  bool operator==(const QMonomial& o) const = default;
  std::string str(const std::vector<std::string>& vars) const;
};

/// Rewrites |p|^{arg} as q^e * (series variables) for the variables of one
/// unramified computation, each defined by |p|^{def_i} = var_i.
class SubstitutionTable {
 public:
  SubstitutionTable(std::vector<std::string> params,
                    std::vector<std::pair<std::string, AffineForm>> defs);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<std::string>& params() const { return params_; }
  const AffineForm& definition(std::size_t i) const { return defs_[i]; }

  /// Throws ConfigurationError unless arg = e + sum x_i def_i with integral e, x_i.
  QMonomial rewrite(const AffineForm& arg) const;

  /// Verifies each (argument, expected rewriting) pair and that every
  /// variable rewrites to itself. Throws ConfigurationError on mismatch.
  void self_check(const std::vector<std::pair<AffineForm, QMonomial>>& expected) const;

 private:
  std::vector<std::string> params_;
  std::vector<std::string> vars_;
  std::vector<AffineForm> defs_;
};

/// X = 2w+s1-s2-1/2, Y = 2s1+2s2-1, Z = 2w-s1+s2-1/2 in parameters (w, s1, s2).
const SubstitutionTable& gl4_table();
/// U = 2w-1/2, V = 3s-1 in parameters (w, s).
const SubstitutionTable& gu22_table();

/// q^e * monomial as a one-term series (throws on negative exponents).
MSeries qmonomial_series(const QMonomial& m, const Rat& q, const std::vector<std::string>& vars,
                         unsigned degree);

}  // namespace rsv
