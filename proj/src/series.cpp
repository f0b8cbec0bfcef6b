#include "rsverify/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rsv {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::initializer_list<std::pair<const std::string, unsigned>> exps) {
  for (const auto& [name, e] : exps)
    if (e != 0) exps_[name] += e;
}

Monomial Monomial::var(const std::string& name, unsigned exponent) {
  Monomial m;
  if (exponent != 0) m.exps_[name] = exponent;
  return m;
}

unsigned Monomial::exponent(const std::string& name) const {
  auto it = exps_.find(name);
  return it == exps_.end() ? 0u : it->second;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [_, e] : exps_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m = *this;
  for (const auto& [name, e] : other.exps_) m.exps_[name] += e;
  return m;
}

Monomial Monomial::pow(unsigned k) const {
  if (k == 0) return {};
  Monomial m = *this;
  for (auto& [_, e] : m.exps_) e *= k;
  return m;
}

std::string Monomial::str() const {
  if (exps_.empty()) return "1";
  std::string out;
  for (const auto& [name, e] : exps_) {
    if (!out.empty()) out += "*";
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

// ----------------------------------------------------------------- MSeries

MSeries::MSeries(std::vector<std::string> vars, unsigned degree)
    : vars_(std::move(vars)), degree_(degree) {
  auto sorted = vars_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw StructuralError("repeated variable name");
}

MSeries MSeries::constant(std::vector<std::string> vars, unsigned degree, const Rat& c) {
  MSeries s(std::move(vars), degree);
  s.add_term(Exponents(s.vars_.size(), 0u), c);
  return s;
}

MSeries MSeries::term(std::vector<std::string> vars, unsigned degree, const Monomial& m,
                      const Rat& c) {
  MSeries s(std::move(vars), degree);
  s.add_term(m, c);
  return s;
}

MSeries::Exponents MSeries::exponents_of(const Monomial& m) const {
  Exponents e(vars_.size(), 0u);
  for (const auto& [name, k] : m.exponents()) {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw StructuralError("variable '" + name + "' not in series");
    e[static_cast<std::size_t>(it - vars_.begin())] = k;
  }
  return e;
}

Monomial MSeries::monomial_of(const Exponents& e) const {
  Monomial m;
  for (std::size_t i = 0; i < vars_.size(); ++i) m = m * Monomial::var(vars_[i], e[i]);
  return m;
}

Rat MSeries::coeff(const Monomial& m) const {
  if (m.total_degree() > degree_)
    throw MathError("coefficient of " + m.str() + " lies above truncation degree " +
                    std::to_string(degree_));
  auto it = coeffs_.find(exponents_of(m));
  return it == coeffs_.end() ? Rat(0) : it->second;
}

void MSeries::add_term(const Exponents& e, const Rat& c) {
  if (e.size() != vars_.size()) throw StructuralError("exponent vector has wrong length");
  if (c == 0) return;
  if (std::accumulate(e.begin(), e.end(), 0u) > degree_) return;
  auto [it, inserted] = coeffs_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

void MSeries::require_compatible(const MSeries& other) const {
  if (vars_ != other.vars_) throw StructuralError("series have different variable sets");
  if (degree_ != other.degree_) throw StructuralError("series have different truncation degrees");
}

MSeries& MSeries::operator+=(const MSeries& other) {
  require_compatible(other);
  for (const auto& [e, c] : other.coeffs_) add_term(e, c);
  return *this;
}

MSeries MSeries::operator+(const MSeries& other) const {
  MSeries r = *this;
  r += other;
  return r;
}

MSeries MSeries::operator-(const MSeries& other) const {
  MSeries r = *this;
  r += other * Rat(-1);
  return r;
}

MSeries MSeries::operator*(const Rat& scalar) const {
  MSeries r(vars_, degree_);
  if (scalar == 0) return r;
  for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, c * scalar);
  return r;
}

MSeries MSeries::operator*(const MSeries& other) const {
  require_compatible(other);
  MSeries r(vars_, degree_);
  struct Entry {
    const Exponents* e;
    unsigned deg;
    const Rat* c;
  };
  auto flatten = [](const std::map<Exponents, Rat>& m) {
    std::vector<Entry> v;
    v.reserve(m.size());
    for (const auto& [e, c] : m) v.push_back({&e, std::accumulate(e.begin(), e.end(), 0u), &c});
    return v;
  };
  const auto lhs = flatten(coeffs_);
  const auto rhs = flatten(other.coeffs_);
  Exponents sum(vars_.size());
  Rat prod;
  for (const auto& a : lhs) {
    for (const auto& b : rhs) {
      if (a.deg + b.deg > degree_) continue;
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = (*a.e)[i] + (*b.e)[i];
      prod = *a.c * *b.c;
      r.add_term(sum, prod);
    }
  }
  return r;
}

MSeries& MSeries::operator*=(const MSeries& other) {
  *this = *this * other;
  return *this;
}

bool MSeries::operator==(const MSeries& other) const {
  return vars_ == other.vars_ && degree_ == other.degree_ && coeffs_ == other.coeffs_;
}

MSeries MSeries::substitute(std::vector<std::string> new_vars, unsigned new_degree,
                            const std::map<std::string, std::pair<Rat, Monomial>>& images) const {
  if (new_degree > degree_)
    throw MathError("substitution cannot raise the truncation degree");
  MSeries result(std::move(new_vars), new_degree);
  std::vector<MSeries> image_series;
  for (const auto& v : vars_) {
    auto it = images.find(v);
    if (it == images.end()) throw StructuralError("no image for variable '" + v + "'");
    if (it->second.second.total_degree() == 0)
      throw MathError("substitution image of '" + v + "' has degree 0");
    image_series.push_back(MSeries::term(result.vars_, new_degree, it->second.second, it->second.first));
  }
  for (const auto& [e, c] : coeffs_) {
    MSeries t = MSeries::constant(result.vars_, new_degree, c);
    for (std::size_t i = 0; i < e.size() && !t.is_zero(); ++i)
      for (unsigned k = 0; k < e[i] && !t.is_zero(); ++k) t *= image_series[i];
    result += t;
  }
  return result;
}

std::string MSeries::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")*" << monomial_of(e).str();
  }
  os << " + O(deg " << degree_ + 1 << ")";
  return os.str();
}

// --------------------------------------------------------------- RecipPoly

RecipPoly::RecipPoly(std::string var, std::vector<Rat> coeffs)
    : var_(std::move(var)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || coeffs_.front() != 1)
    throw MathError("Euler factor must have constant term 1");
  trim();
}

RecipPoly RecipPoly::one(std::string var) { return RecipPoly(std::move(var), {Rat(1)}); }

RecipPoly RecipPoly::from_eigenvalues(const std::vector<Rat>& eigenvalues, std::string var) {
  std::vector<Rat> c{Rat(1)};
  for (const auto& beta : eigenvalues) {
    std::vector<Rat> next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i];
      next[i + 1] -= beta * c[i];
    }
    c = std::move(next);
  }
  return RecipPoly(std::move(var), std::move(c));
}

void RecipPoly::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat RecipPoly::operator()(const Rat& t) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

bool RecipPoly::is_even() const {
  for (std::size_t i = 1; i < coeffs_.size(); i += 2)
    if (coeffs_[i] != 0) return false;
  return true;
}

RecipPoly RecipPoly::in_square() const {
  std::vector<Rat> c(2 * coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[2 * i] = coeffs_[i];
  return RecipPoly(var_, std::move(c));
}

RecipPoly RecipPoly::operator*(const RecipPoly& other) const {
  if (var_ != other.var_) throw StructuralError("Euler factors in different variables");
  std::vector<Rat> c(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * other.coeffs_[j];
  return RecipPoly(var_, std::move(c));
}

std::string RecipPoly::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (i != 0) os << " + ";
    os << "(" << to_string(coeffs_[i]) << ")";
    if (i >= 1) os << "*" << var_;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

// --------------------------------------------------- series <-> polynomials

MSeries series_from_recip(const RecipPoly& p, const Monomial& m, const Rat& scale,
                          std::vector<std::string> vars, unsigned degree) {
  const unsigned step = m.total_degree();
  if (step == 0) throw MathError("cannot expand 1/p under a degree-0 substitution");
  const unsigned terms = degree / step;
  const auto& c = p.coeffs();
  // 1/p(t) = sum h_k t^k with h_0 = 1, h_k = -sum_{j>=1} c_j h_{k-j}
  std::vector<Rat> h(terms + 1);
  h[0] = 1;
  for (unsigned k = 1; k <= terms; ++k) {
    Rat acc = 0;
    for (unsigned j = 1; j <= k && j < c.size(); ++j) acc -= c[j] * h[k - j];
    h[k] = acc;
  }
  MSeries out(std::move(vars), degree);
  Rat s = 1;
  for (unsigned k = 0; k <= terms; ++k) {
    out.add_term(m.pow(k), h[k] * s);
    s *= scale;
  }
  return out;
}

MSeries series_from_poly(const RecipPoly& p, const Monomial& m, const Rat& scale,
                         std::vector<std::string> vars, unsigned degree) {
  MSeries out(std::move(vars), degree);
  Rat s = 1;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (k * m.total_degree() > degree && m.total_degree() > 0) break;
    out.add_term(m.pow(static_cast<unsigned>(k)), p.coeffs()[k] * s);
    s *= scale;
  }
  return out;
}

}  // namespace rsv
