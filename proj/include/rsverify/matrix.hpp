#pragma once

#include <cstddef>
#include <vector>

#include "rsverify/rational.hpp"
#include "rsverify/series.hpp"

namespace rsv {

/// Small dense square matrix over Rat.
class RatMatrix {
 public:
  explicit RatMatrix(std::size_t n) : n_(n), a_(n * n) {}
  RatMatrix(std::size_t n, std::vector<Rat> row_major);

  static RatMatrix identity(std::size_t n);
  static RatMatrix diagonal(const std::vector<Rat>& d);

  std::size_t size() const { return n_; }
  Rat& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator*(const Rat& s) const;
  RatMatrix operator+(const RatMatrix& o) const;
  bool operator==(const RatMatrix& o) const = default;

  RatMatrix transpose() const;
  Rat trace() const;
  Rat determinant() const;
  /// Throws MathError if singular.
  RatMatrix inverse() const;
  bool is_diagonal() const;

  /// det(1 - M T) as a reciprocal polynomial in `var`.
  RecipPoly reciprocal_charpoly(std::string var = "T") const;

 private:
  std::size_t n_;
  std::vector<Rat> a_;
};

using Rep4Matrix = RatMatrix;
using Rep6Matrix = RatMatrix;
using Rep8Matrix = RatMatrix;

}  // namespace rsv
