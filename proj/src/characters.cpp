#include "rsverify/characters.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <vector>

#include "rsverify/matrix.hpp"

namespace rsv {

std::string WeightA3::str() const {
  return "A[" + std::to_string(n1) + "," + std::to_string(n2) + "," + std::to_string(n3) + "]";
}

WeightA3 WeightA3::from_partition(const std::array<unsigned, 4>& l) {
  if (!(l[0] >= l[1] && l[1] >= l[2] && l[2] >= l[3])) throw MathError("not a partition");
  return {l[0] - l[1], l[1] - l[2], l[2] - l[3]};
}

std::string WeightC2::str() const {
  return "C2[spin=" + std::to_string(mSpin) + ",std=" + std::to_string(mStd) + "]";
}

SatakePointA3::SatakePointA3(std::array<Rat, 4> alpha) : alpha_(std::move(alpha)) {
  Rat det = 1;
  for (const auto& x : alpha_) {
    if (x == 0) throw MathError("Satake coordinate must be nonzero");
    det *= x;
  }
  if (det != 1) throw MathError("SL4 Satake point must have determinant 1");
}

SatakePointA3 SatakePointA3::from_three(const Rat& a1, const Rat& a2, const Rat& a3) {
  if (a1 == 0 || a2 == 0 || a3 == 0) throw MathError("Satake coordinate must be nonzero");
  Rat a4 = 1 / (a1 * a2 * a3);
  return SatakePointA3({a1, a2, a3, a4});
}

bool SatakePointA3::pairwise_distinct() const {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (alpha_[i] == alpha_[j]) return false;
  return true;
}

SatakePointA3 SatakePointA3::inverse() const {
  return SatakePointA3({1 / alpha_[0], 1 / alpha_[1], 1 / alpha_[2], 1 / alpha_[3]});
}

std::string SatakePointA3::str() const {
  return "(" + to_string(alpha_[0]) + "," + to_string(alpha_[1]) + "," + to_string(alpha_[2]) +
         "," + to_string(alpha_[3]) + ")";
}

SatakePointC2::SatakePointC2(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {
  if (a == 0 || b == 0) throw MathError("Satake coordinate must be nonzero");
}

bool SatakePointC2::weyl_regular() const {
  // e^rho prod (1 - e^{-alpha}) over e1-e2, e1+e2, 2e1, 2e2
  return a != b && a * b != 1 && a * a != 1 && b * b != 1;
}

std::string SatakePointC2::str() const { return "(" + to_string(a) + "," + to_string(b) + ")"; }

// ------------------------------------------------------------- A3 tableaux

namespace {

using Shape = std::array<unsigned, 4>;

// Shapes mu inside lambda with lambda/mu a horizontal strip and mu having at
// most `rows` nonzero parts: lambda_1 >= mu_1 >= lambda_2 >= mu_2 >= ...
void interlacing(const Shape& lambda, unsigned rows, std::vector<Shape>& out) {
  Shape mu{};
  auto rec = [&](auto&& self, unsigned i) -> void {
    if (i == 4) {
      out.push_back(mu);
      return;
    }
    if (i >= rows) {
      // rows beyond the allowed count must be empty; the strip may still
      // remove at most one box per column, enforced by lambda_{i+1} <= mu_i.
      if (i + 1 < 4 && lambda[i + 1] > 0) return;
      mu[i] = 0;
      self(self, i + 1);
      return;
    }
    const unsigned hi = lambda[i];
    const unsigned lo = i + 1 < 4 ? lambda[i + 1] : 0;
    for (unsigned v = lo; v <= hi; ++v) {
      mu[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

unsigned size_of(const Shape& s) { return s[0] + s[1] + s[2] + s[3]; }

// Contents of all tableaux with entries <= k and shape `lambda`, keyed on the
// first k entries of the content vector. Entry k occupies lambda/mu, a
// horizontal strip; the rest is a tableau of shape mu with entries <= k-1.
void contents_rec(const Shape& lambda, unsigned k, std::array<unsigned, 4>& content,
                  ContentCounts& acc) {
  if (k == 0) {
    if (size_of(lambda) == 0) ++acc[content];
    return;
  }
  std::vector<Shape> strips;
  interlacing(lambda, k - 1, strips);
  for (const auto& mu : strips) {
    content[k - 1] = size_of(lambda) - size_of(mu);
    contents_rec(mu, k - 1, content, acc);
  }
  content[k - 1] = 0;
}

struct A3Cache {
  std::mutex mu;
  std::map<WeightA3, ContentCounts> table;
};

A3Cache& a3_cache() {
  static A3Cache c;
  return c;
}

}  // namespace

const ContentCounts& tableau_contents(const WeightA3& w) {
  auto& cache = a3_cache();
  {
    std::lock_guard lock(cache.mu);
    auto it = cache.table.find(w);
    if (it != cache.table.end()) return it->second;
  }
  ContentCounts counts;
  std::array<unsigned, 4> content{};
  contents_rec(w.partition(), 4, content, counts);
  std::lock_guard lock(cache.mu);
  return cache.table.try_emplace(w, std::move(counts)).first->second;
}

std::uint64_t tableau_count(const WeightA3& w) {
  std::uint64_t n = 0;
  for (const auto& [_, c] : tableau_contents(w)) n += c;
  return n;
}

Rat schur_A3(const WeightA3& w, const SatakePointA3& pt) {
  const auto& table = tableau_contents(w);
  const auto lambda = w.partition();
  const unsigned total = size_of(lambda);
  // Clear denominators: alpha_i = n_i/d_i, and every monomial has degree
  // `total`, so alpha^mu * prod d_i^total = prod n_i^mu_i d_i^(total-mu_i).
  std::array<std::vector<BigInt>, 4> factor;
  BigInt common = 1;
  for (std::size_t i = 0; i < 4; ++i) {
    const BigInt n = pt[i].get_num();
    const BigInt d = pt[i].get_den();
    std::vector<BigInt> npow(total + 1), dpow(total + 1);
    npow[0] = 1;
    dpow[0] = 1;
    for (unsigned k = 1; k <= total; ++k) {
      npow[k] = npow[k - 1] * n;
      dpow[k] = dpow[k - 1] * d;
    }
    factor[i].resize(total + 1);
    for (unsigned k = 0; k <= total; ++k) factor[i][k] = npow[k] * dpow[total - k];
    common *= dpow[total];
  }
  BigInt acc = 0, term;
  for (const auto& [mu, count] : table) {
    term = factor[0][mu[0]] * factor[1][mu[1]];
    term *= factor[2][mu[2]];
    term *= factor[3][mu[3]];
    if (count != 1) term *= BigInt(static_cast<unsigned long>(count));
    acc += term;
  }
  Rat r(acc, common);
  r.canonicalize();
  return r;
}

Rat schur_A3_wcf(const WeightA3& w, const SatakePointA3& pt) {
  if (!pt.pairwise_distinct()) throw DegeneratePoint("bialternant needs distinct coordinates");
  const auto lambda = w.partition();
  RatMatrix num(4), den(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      num(i, j) = pow(pt[i], static_cast<int>(lambda[j] + 3 - j));
      den(i, j) = pow(pt[i], static_cast<int>(3 - j));
    }
  return num.determinant() / den.determinant();
}

// ----------------------------------------------------------------- C2 Weyl

namespace {

struct SignedPerm {
  bool swap;
  int s1, s2;
  int sign() const { return (swap ? -1 : 1) * s1 * s2; }
  std::pair<int, int> apply(std::pair<int, int> v) const {
    auto [x, y] = swap ? std::pair{v.second, v.first} : v;
    return {s1 * x, s2 * y};
  }
};

constexpr std::array<SignedPerm, 8> kWeylC2{{{false, 1, 1},
                                             {false, -1, 1},
                                             {false, 1, -1},
                                             {false, -1, -1},
                                             {true, 1, 1},
                                             {true, -1, 1},
                                             {true, 1, -1},
                                             {true, -1, -1}}};

constexpr std::pair<int, int> kRhoC2{2, 1};
constexpr std::array<std::pair<int, int>, 4> kPositiveRootsC2{{{1, -1}, {1, 1}, {2, 0}, {0, 2}}};

LaurentCounts alternant(std::pair<int, int> v) {
  LaurentCounts out;
  for (const auto& w : kWeylC2) {
    auto& c = out[w.apply(v)];
    c += w.sign();
    if (c == 0) out.erase(w.apply(v));
  }
  return out;
}

// P / (1 - e^{-root}), exact. Leading terms are taken with respect to a
// functional positive on every positive root.
LaurentCounts divide_by_root(LaurentCounts p, std::pair<int, int> root) {
  auto height = [](std::pair<int, int> e) { return 3 * e.first + e.second; };
  LaurentCounts q;
  std::size_t guard = 0;
  while (!p.empty()) {
    if (++guard > 1'000'000) throw MathError("Weyl alternant not divisible by denominator");
    auto lead = std::max_element(p.begin(), p.end(), [&](const auto& x, const auto& y) {
      return std::pair{height(x.first), x.first} < std::pair{height(y.first), y.first};
    });
    const auto mu = lead->first;
    const auto c = lead->second;
    q[mu] += c;
    p.erase(lead);
    const std::pair<int, int> shifted{mu.first - root.first, mu.second - root.second};
    auto& t = p[shifted];
    t += c;
    if (t == 0) p.erase(shifted);
  }
  for (auto it = q.begin(); it != q.end();) it = it->second == 0 ? q.erase(it) : std::next(it);
  return q;
}

struct C2Cache {
  std::mutex mu;
  std::map<WeightC2, LaurentCounts> table;
};

C2Cache& c2_cache() {
  static C2Cache c;
  return c;
}

Rat eval_alternant(const LaurentCounts& p, const SatakePointC2& pt) {
  Rat s = 0;
  for (const auto& [e, c] : p) s += Rat(c) * pow(pt.a, e.first) * pow(pt.b, e.second);
  return s;
}

}  // namespace

const LaurentCounts& c2_weight_multiplicities(const WeightC2& w) {
  auto& cache = c2_cache();
  {
    std::lock_guard lock(cache.mu);
    auto it = cache.table.find(w);
    if (it != cache.table.end()) return it->second;
  }
  const auto [hx, hy] = w.highest_weight();
  // chi = A_{lambda+rho} / (e^rho prod_{alpha>0} (1 - e^{-alpha}))
  LaurentCounts p = alternant({hx + kRhoC2.first, hy + kRhoC2.second});
  for (const auto& root : kPositiveRootsC2) p = divide_by_root(std::move(p), root);
  LaurentCounts chi;
  for (const auto& [e, c] : p) chi[{e.first - kRhoC2.first, e.second - kRhoC2.second}] = c;
  std::lock_guard lock(cache.mu);
  return cache.table.try_emplace(w, std::move(chi)).first->second;
}

Rat char_C2(const WeightC2& w, const SatakePointC2& pt) {
  const Rat den = eval_alternant(alternant(kRhoC2), pt);
  if (den == 0) throw DegeneratePoint("Weyl denominator vanishes at " + pt.str());
  const auto [hx, hy] = w.highest_weight();
  return eval_alternant(alternant({hx + kRhoC2.first, hy + kRhoC2.second}), pt) / den;
}

Rat char_C2_total(const WeightC2& w, const SatakePointC2& pt) {
  const auto& mult = c2_weight_multiplicities(w);
  int m = 0;
  for (const auto& [e, _] : mult) m = std::max({m, std::abs(e.first), std::abs(e.second)});
  // a^x = na^x da^-x; scale by (na da)^m (nb db)^m so every exponent is >= 0.
  auto table = [m](const Rat& r) {
    const BigInt n = r.get_num(), d = r.get_den();
    std::vector<BigInt> np(2 * m + 1), dp(2 * m + 1), out(2 * m + 1);
    np[0] = 1;
    dp[0] = 1;
    for (int k = 1; k <= 2 * m; ++k) {
      np[k] = np[k - 1] * n;
      dp[k] = dp[k - 1] * d;
    }
    for (int x = -m; x <= m; ++x) out[x + m] = np[m + x] * dp[m - x];
    return std::pair{out, BigInt(np[m] * dp[m])};
  };
  auto [ta, sa] = table(pt.a);
  auto [tb, sb] = table(pt.b);
  BigInt acc = 0;
  for (const auto& [e, c] : mult)
    acc += BigInt(static_cast<long>(c)) * ta[e.first + m] * tb[e.second + m];
  Rat r(acc, sa * sb);
  r.canonicalize();
  return r;
}

}  // namespace rsv
