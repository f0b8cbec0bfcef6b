#include "rsverify/littlewood.hpp"

#include <vector>

namespace rsv {

WeightMultiset lr_closed_form(unsigned t, unsigned u, unsigned v) {
  WeightMultiset out;
  for (unsigned i = 0; i <= t; ++i)
    for (unsigned k = 0; k <= i; ++k)
      for (unsigned j = 0; i + j <= u; ++j) {
        if (static_cast<int>(u) - static_cast<int>(v) > static_cast<int>(j + k)) continue;
        // every entry is non-negative under the constraints
        const unsigned n1 = t + u - 2 * i - j;
        const unsigned n2 = i + j - k;
        const unsigned n3 = v + j + 2 * k - u;
        ++out[WeightA3{n1, n2, n3}];
      }
  return out;
}

namespace {

constexpr unsigned kMaxRows = 4;

struct Filling {
  std::vector<std::vector<unsigned>> rows;  // labels of added boxes per row, left to right
  Partition4 base;
  Partition4 shape;
};

// Reverse reading word: rows top to bottom, each read right to left. It is a
// lattice word when every prefix holds at least as many (label) as (label+1).
bool is_lattice(const Filling& f, unsigned labels) {
  std::vector<unsigned> seen(labels + 1, 0);
  for (unsigned r = 0; r < kMaxRows; ++r)
    for (auto it = f.rows[r].rbegin(); it != f.rows[r].rend(); ++it) {
      const unsigned l = *it;
      ++seen[l];
      if (l > 1 && seen[l] > seen[l - 1]) return false;
    }
  return true;
}

// Label of the box at (row, col) in the skew filling, 0 if it is a base box.
unsigned label_at(const Filling& f, unsigned row, unsigned col) {
  if (col < f.base[row]) return 0;
  return f.rows[row][col - f.base[row]];
}

void add_strip(Filling& f, const Partition4& mu, unsigned label, WeightMultiset& out) {
  if (label > kMaxRows || mu[label - 1] == 0) {
    if (is_lattice(f, label - 1)) ++out[WeightA3::from_partition(f.shape)];
    return;
  }
  const unsigned boxes = mu[label - 1];
  // distribute `boxes` boxes of this label over the rows as a horizontal strip
  Partition4 extra{};
  auto rec = [&](auto&& self, unsigned row, unsigned left) -> void {
    if (row == kMaxRows) {
      if (left != 0) return;
      Filling g = f;
      for (unsigned r = 0; r < kMaxRows; ++r) {
        g.shape[r] = f.shape[r] + extra[r];
        for (unsigned e = 0; e < extra[r]; ++e) g.rows[r].push_back(label);
      }
      for (unsigned r = 1; r < kMaxRows; ++r)
        if (g.shape[r] > g.shape[r - 1]) return;
      // column strictness: a new box may not sit below a box with the same
      // label (labels already present are smaller, base boxes are 0)
      for (unsigned r = 1; r < kMaxRows; ++r)
        for (unsigned c = f.shape[r]; c < g.shape[r]; ++c)
          if (c < g.shape[r - 1] && label_at(g, r - 1, c) == label) return;
      add_strip(g, mu, label + 1, out);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      extra[row] = e;
      self(self, row + 1, left - e);
    }
    extra[row] = 0;
  };
  rec(rec, 0, boxes);
}

}  // namespace

WeightMultiset lr_oracle(const Partition4& lambda, const Partition4& mu) {
  for (unsigned r = 1; r < kMaxRows; ++r)
    if (lambda[r] > lambda[r - 1] || mu[r] > mu[r - 1]) throw MathError("not a partition");
  WeightMultiset out;
  Filling f{std::vector<std::vector<unsigned>>(kMaxRows), lambda, lambda};
  add_strip(f, mu, 1, out);
  return out;
}

}  // namespace rsv
