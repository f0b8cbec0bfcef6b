#include "rsverify/substitution.hpp"

#include <algorithm>

#include "rsverify/matrix.hpp"

namespace rsv {

AffineForm::AffineForm(Rat constant, std::map<std::string, Rat> coeffs)
    : constant_(std::move(constant)), coeffs_(std::move(coeffs)) {
  prune();
}

AffineForm AffineForm::param(const std::string& name, const Rat& coeff) {
  return AffineForm(0, {{name, coeff}});
}

void AffineForm::prune() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) it = it->second == 0 ? coeffs_.erase(it) : std::next(it);
}

Rat AffineForm::coeff(const std::string& name) const {
  auto it = coeffs_.find(name);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

AffineForm AffineForm::operator+(const AffineForm& o) const {
  AffineForm r = *this;
  r.constant_ += o.constant_;
  for (const auto& [p, c] : o.coeffs_) r.coeffs_[p] += c;
  r.prune();
  return r;
}

AffineForm AffineForm::operator-(const AffineForm& o) const { return *this + o * Rat(-1); }

AffineForm AffineForm::operator*(const Rat& s) const {
  AffineForm r = *this;
  r.constant_ *= s;
  for (auto& [_, c] : r.coeffs_) c *= s;
  r.prune();
  return r;
}

AffineForm AffineForm::substitute(const std::map<std::string, AffineForm>& images) const {
  AffineForm r(constant_);
  for (const auto& [p, c] : coeffs_) {
    auto it = images.find(p);
    r = r + (it == images.end() ? AffineForm::param(p, c) : it->second * c);
  }
  return r;
}

std::string AffineForm::str() const {
  std::string out;
  for (const auto& [p, c] : coeffs_) {
    if (!out.empty()) out += c > 0 ? "+" : "";
    if (c == -1) out += "-";
    else if (c != 1) out += to_string(c) + (c.get_den() == 1 ? "" : "*");
    out += p;
  }
  if (constant_ != 0 || out.empty()) {
    if (!out.empty() && constant_ > 0) out += "+";
    out += to_string(constant_);
  }
  return out;
}

QMonomial QMonomial::operator*(const QMonomial& o) const {
  if (exponents.size() != o.exponents.size()) throw ConfigurationError("QMonomial arity mismatch");
  QMonomial r = *this;
  r.q_power += o.q_power;
  for (std::size_t i = 0; i < exponents.size(); ++i) r.exponents[i] += o.exponents[i];
  return r;
}

QMonomial QMonomial::pow(unsigned k) const {
  QMonomial r = *this;
  r.q_power *= static_cast<int>(k);
  for (auto& e : r.exponents) e *= static_cast<int>(k);
  return r;
}

bool QMonomial::is_polynomial() const {
  for (int e : exponents)
    if (e < 0) return false;
  return true;
}

Monomial QMonomial::monomial(const std::vector<std::string>& vars) const {
  if (vars.size() != exponents.size()) throw ConfigurationError("QMonomial arity mismatch");
  Monomial m;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (exponents[i] < 0) throw ConfigurationError("negative exponent of " + vars[i]);
    m = m * Monomial::var(vars[i], static_cast<unsigned>(exponents[i]));
  }
  return m;
}

std::string QMonomial::str(const std::vector<std::string>& vars) const {
  std::string out = q_power == 0 ? "" : "q^" + std::to_string(q_power);
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (exponents[i] != 1) out += "^" + std::to_string(exponents[i]);
  }
  return out.empty() ? "1" : out;
}

SubstitutionTable::SubstitutionTable(std::vector<std::string> params,
                                     std::vector<std::pair<std::string, AffineForm>> defs)
    : params_(std::move(params)) {
  for (auto& [name, form] : defs) {
    for (const auto& [p, _] : form.coeffs())
      if (std::find(params_.begin(), params_.end(), p) == params_.end())
        throw ConfigurationError("definition of " + name + " uses unknown parameter " + p);
    vars_.push_back(name);
    defs_.push_back(std::move(form));
  }
}

QMonomial SubstitutionTable::rewrite(const AffineForm& arg) const {
  const std::size_t rows = params_.size();
  const std::size_t cols = vars_.size();
  // augmented system: sum_i x_i coeff_p(def_i) = coeff_p(arg) for every parameter p
  std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = defs_[c].coeff(params_[r]);
    m[r][cols] = arg.coeff(params_[r]);
  }
  for (const auto& [p, _] : arg.coeffs())
    if (std::find(params_.begin(), params_.end(), p) == params_.end())
      throw ConfigurationError("argument " + arg.str() + " uses unknown parameter " + p);
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    const Rat piv = m[rank][c];
    for (auto& x : m[rank]) x /= piv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rat f = m[r][c];
      for (std::size_t k = 0; k <= cols; ++k) m[r][k] -= f * m[rank][k];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  if (rank != cols) throw ConfigurationError("substitution variables are not independent");
  for (std::size_t r = rank; r < rows; ++r)
    if (m[r][cols] != 0) throw ConfigurationError("argument " + arg.str() + " is not expressible");
  QMonomial out;
  out.exponents.assign(cols, 0);
  Rat e = arg.constant();
  for (std::size_t r = 0; r < rank; ++r) {
    const Rat& x = m[r][cols];
    if (x.get_den() != 1)
      throw ConfigurationError("argument " + arg.str() + " needs a fractional power of " + vars_[pivot_col[r]]);
    out.exponents[pivot_col[r]] = static_cast<int>(x.get_num().get_si());
    e -= x * defs_[pivot_col[r]].constant();
  }
  if (e.get_den() != 1) throw ConfigurationError("argument " + arg.str() + " needs a fractional power of q");
  out.q_power = static_cast<int>(e.get_num().get_si());
  return out;
}

void SubstitutionTable::self_check(const std::vector<std::pair<AffineForm, QMonomial>>& expected) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    QMonomial unit;
    unit.exponents.assign(vars_.size(), 0);
    unit.exponents[i] = 1;
    if (!(rewrite(defs_[i]) == unit)) throw ConfigurationError("variable " + vars_[i] + " does not rewrite to itself");
  }
  for (const auto& [arg, want] : expected) {
    const QMonomial got = rewrite(arg);
    if (!(got == want))
      throw ConfigurationError("|p|^(" + arg.str() + ") rewrites to " + got.str(vars_) + ", expected " +
                               want.str(vars_));
  }
}

const SubstitutionTable& gl4_table() {
  static const SubstitutionTable t = [] {
    const auto w = AffineForm::param("w");
    const auto s1 = AffineForm::param("s1");
    const auto s2 = AffineForm::param("s2");
    const Rat half(1, 2);
    return SubstitutionTable({"w", "s1", "s2"},
                             {{"X", w * 2 + s1 - s2 - half}, {"Y", s1 * 2 + s2 * 2 - Rat(1)}, {"Z", w * 2 - s1 + s2 - half}});
  }();
  return t;
}

const SubstitutionTable& gu22_table() {
  static const SubstitutionTable t = [] {
    const auto w = AffineForm::param("w");
    const auto s = AffineForm::param("s");
    return SubstitutionTable({"w", "s"}, {{"U", w * 2 - Rat(1, 2)}, {"V", s * 3 - Rat(1)}});
  }();
  return t;
}

MSeries qmonomial_series(const QMonomial& m, const Rat& q, const std::vector<std::string>& vars,
                         unsigned degree) {
  return MSeries::term(vars, degree, m.monomial(vars), pow(q, m.q_power));
}

}  // namespace rsv
