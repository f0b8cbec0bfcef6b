#include "rsverify/matrix.hpp"

#include <utility>

namespace rsv {

RatMatrix::RatMatrix(std::size_t n, std::vector<Rat> row_major) : n_(n), a_(std::move(row_major)) {
  if (a_.size() != n * n) throw StructuralError("matrix data has wrong length");
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<Rat>& d) {
  RatMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (n_ != o.n_) throw StructuralError("matrix size mismatch");
  RatMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const Rat& x = (*this)(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) r(i, j) += x * o(k, j);
    }
  return r;
}

RatMatrix RatMatrix::operator*(const Rat& s) const {
  RatMatrix r = *this;
  for (auto& x : r.a_) x *= s;
  return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (n_ != o.n_) throw StructuralError("matrix size mismatch");
  RatMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Rat RatMatrix::trace() const {
  Rat t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

Rat RatMatrix::determinant() const {
  RatMatrix m = *this;
  Rat det = 1;
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && m(pivot, col) == 0) ++pivot;
    if (pivot == n_) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n_; ++r) {
      if (m(r, col) == 0) continue;
      Rat f = m(r, col) / m(col, col);
      for (std::size_t j = col; j < n_; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return det;
}

RatMatrix RatMatrix::inverse() const {
  RatMatrix m = *this;
  RatMatrix inv = identity(n_);
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && m(pivot, col) == 0) ++pivot;
    if (pivot == n_) throw MathError("singular matrix");
    for (std::size_t j = 0; j < n_; ++j) {
      std::swap(m(pivot, j), m(col, j));
      std::swap(inv(pivot, j), inv(col, j));
    }
    Rat p = m(col, col);
    for (std::size_t j = 0; j < n_; ++j) {
      m(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == col || m(r, col) == 0) continue;
      Rat f = m(r, col);
      for (std::size_t j = 0; j < n_; ++j) {
        m(r, j) -= f * m(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

bool RatMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

RecipPoly RatMatrix::reciprocal_charpoly(std::string var) const {
  // Faddeev-LeVerrier: det(x - M) = x^n + c_1 x^{n-1} + ... + c_n, and
  // det(1 - M T) = 1 + c_1 T + ... + c_n T^n.
  std::vector<Rat> c(n_ + 1);
  c[0] = 1;
  RatMatrix mk = identity(n_);
  RatMatrix am(n_);
  for (std::size_t k = 1; k <= n_; ++k) {
    am = *this * mk;
    c[k] = -am.trace() / Rat(static_cast<long>(k));
    mk = am;
    for (std::size_t i = 0; i < n_; ++i) mk(i, i) += c[k];
  }
  return RecipPoly(std::move(var), std::move(c));
}

}  // namespace rsv
