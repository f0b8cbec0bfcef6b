#include "rsverify/finite_field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace rsv::ff {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

const FiniteField& shared_field(unsigned p, unsigned degree) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<FiniteField>> fields;
  std::lock_guard lock(mu);
  auto& slot = fields[{p, degree}];
  if (!slot) slot = std::make_unique<FiniteField>(p, degree);
  return *slot;
}

FiniteField::FiniteField(unsigned p, unsigned degree) : p_(p), degree_(degree) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (degree != 1 && degree != 2) throw std::invalid_argument("only prime fields and quadratic extensions");
  q_ = degree == 1 ? p : p * p;
  if (q_ > 25) throw std::invalid_argument("field too large for table arithmetic");

  // t^2 = c0 + c1 t
  unsigned c0 = 0, c1 = 0;
  if (degree == 2) {
    if (p == 2) {
      c0 = 1;
      c1 = 1;
    } else {
      for (unsigned n = 2; n < p && c0 == 0; ++n) {
        bool square = false;
        for (unsigned x = 1; x < p; ++x) square = square || (x * x) % p == n;
        if (!square) c0 = n;
      }
    }
  }
  auto parts = [&](unsigned x) { return std::pair<unsigned, unsigned>{x % p, x / p}; };
  auto enc = [&](unsigned a, unsigned b) { return static_cast<Elem>(a % p + (b % p) * p); };

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  for (unsigned x = 0; x < q_; ++x) {
    auto [a, b] = parts(x);
    neg_[x] = enc(p - a, p - b);
    for (unsigned y = 0; y < q_; ++y) {
      auto [c, d] = parts(y);
      add_[x * q_ + y] = enc(a + c, b + d);
      const unsigned bd = b * d;
      mul_[x * q_ + y] = enc(a * c + bd * c0, a * d + b * c + bd * c1);
    }
  }
  inv_.assign(q_, 0);
  for (unsigned x = 1; x < q_; ++x)
    for (unsigned y = 1; y < q_; ++y)
      if (mul_[x * q_ + y] == 1) inv_[x] = static_cast<Elem>(y);
  conj_.resize(q_);
  for (unsigned x = 0; x < q_; ++x) {
    Elem r = 1;
    for (unsigned k = 0; k < p; ++k) r = mul(r, static_cast<Elem>(x));
    conj_[x] = r;
  }
}

Elem FiniteField::inv(Elem x) const {
  if (x == 0) throw std::domain_error("inverse of zero in a finite field");
  return inv_[x];
}

Elem FiniteField::from_int(long n) const {
  long r = n % static_cast<long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::string FiniteField::str(Elem x) const {
  if (degree_ == 1 || x < p_) return std::to_string(x);
  const unsigned a = x % p_, b = x / p_;
  std::string s = a ? std::to_string(a) + "+" : "";
  return s + (b == 1 ? "" : std::to_string(b)) + "t";
}

FqMatrix FqMatrix::identity(const FiniteField& f) {
  FqMatrix m(f);
  for (int i = 0; i < 4; ++i) m(i, i) = 1;
  return m;
}

FqMatrix FqMatrix::permutation(const FiniteField& f, const std::array<int, 4>& sigma) {
  FqMatrix m(f);
  for (int j = 0; j < 4; ++j) m(sigma[j] - 1, j) = 1;
  return m;
}

FqMatrix FqMatrix::from_ints(const FiniteField& f, const std::array<long, 16>& entries) {
  FqMatrix m(f);
  for (int k = 0; k < 16; ++k) m.a_[k] = f.from_int(entries[k]);
  return m;
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
  FqMatrix r(*f_);
  const FiniteField& f = *f_;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Elem acc = 0;
      for (int k = 0; k < 4; ++k) acc = f.add(acc, f.mul((*this)(i, k), o(k, j)));
      r(i, j) = acc;
    }
  return r;
}

FqMatrix FqMatrix::conj_transpose() const {
  FqMatrix r(*f_);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = f_->conj((*this)(j, i));
  return r;
}

bool FqMatrix::invertible() const {
  std::vector<Vec4> rows{row(0), row(1), row(2), row(3)};
  return subspace_key(*f_, rows).size() == 16;
}

std::string FqMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 4; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < 4; ++j) os << (j ? " " : "") << f_->str((*this)(i, j));
  }
  os << "]";
  return os.str();
}

Vec4 row_times(const FiniteField& f, const Vec4& v, const FqMatrix& g) {
  Vec4 r{0, 0, 0, 0};
  for (int k = 0; k < 4; ++k) {
    if (v[k] == 0) continue;
    for (int j = 0; j < 4; ++j) r[j] = f.add(r[j], f.mul(v[k], g(k, j)));
  }
  return r;
}

std::vector<Elem> subspace_key(const FiniteField& f, std::vector<Vec4> rows) {
  std::size_t rank = 0;
  for (int col = 0; col < 4 && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const Elem s = f.inv(rows[rank][col]);
    for (auto& x : rows[rank]) x = f.mul(x, s);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Elem c = rows[r][col];
      for (int j = 0; j < 4; ++j) rows[r][j] = f.sub(rows[r][j], f.mul(c, rows[rank][j]));
    }
    ++rank;
  }
  std::vector<Elem> key;
  key.reserve(4 * rank);
  for (std::size_t r = 0; r < rank; ++r) key.insert(key.end(), rows[r].begin(), rows[r].end());
  return key;
}

}  // namespace rsv::ff
