#include "rsverify/cosets.hpp"

#include <array>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace rsv::cosets {

using ff::Elem;
using ff::Vec4;

namespace {

using Mask = std::array<bool, 16>;  // true = entry may be nonzero
using Key = std::vector<Elem>;

Mask mask_with_zeros(std::initializer_list<std::pair<int, int>> zeros_1based) {
  Mask m;
  m.fill(true);
  for (auto [i, j] : zeros_1based) m[4 * (i - 1) + (j - 1)] = false;
  return m;
}

// P = Stab<b3,b4>, Q = Stab(<b4> in <b2,b3,b4>) for the right action.
const Mask& p_mask() {
  static const Mask m = mask_with_zeros({{3, 1}, {3, 2}, {4, 1}, {4, 2}});
  return m;
}
const Mask& q_flag_mask() {
  static const Mask m = mask_with_zeros({{2, 1}, {3, 1}, {4, 1}, {4, 2}, {4, 3}});
  return m;
}
const Mask& q_line_mask() {
  static const Mask m = mask_with_zeros({{4, 1}, {4, 2}, {4, 3}});
  return m;
}
const Mask& full_mask() {
  static const Mask m = mask_with_zeros({});
  return m;
}

std::vector<Vec4> row_candidates(const FiniteField& f, const Mask& mask, int row) {
  std::vector<int> free;
  for (int j = 0; j < 4; ++j)
    if (mask[4 * row + j]) free.push_back(j);
  std::vector<Vec4> out;
  Vec4 v{0, 0, 0, 0};
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == free.size()) {
      out.push_back(v);
      return;
    }
    for (unsigned x = 0; x < f.size(); ++x) {
      v[free[k]] = static_cast<Elem>(x);
      rec(k + 1);
    }
    v[free[k]] = 0;
  };
  rec(0);
  return out;
}

/// Depth-first over rows; `accept` sees the rows chosen so far and may prune.
void enumerate_rows(const FiniteField& f, const Mask& mask,
                    const std::function<bool(const std::vector<Vec4>&)>& accept,
                    const std::function<void(const FqMatrix&)>& emit) {
  std::array<std::vector<Vec4>, 4> cand;
  for (int r = 0; r < 4; ++r) cand[r] = row_candidates(f, mask, r);
  std::vector<Vec4> rows;
  std::function<void()> rec = [&]() {
    const std::size_t r = rows.size();
    if (r == 4) {
      FqMatrix g(f);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g(i, j) = rows[i][j];
      emit(g);
      return;
    }
    for (const auto& v : cand[r]) {
      rows.push_back(v);
      if (accept(rows)) rec();
      rows.pop_back();
    }
  };
  rec();
}

bool independent_rows(const FiniteField& f, const std::vector<Vec4>& rows) {
  return ff::subspace_key(f, rows).size() == 4 * rows.size();
}

std::vector<FqMatrix> enumerate_gl_shape(const FiniteField& f, const Mask& mask) {
  std::vector<FqMatrix> out;
  enumerate_rows(f, mask, [&](const std::vector<Vec4>& rows) { return independent_rows(f, rows); },
                 [&](const FqMatrix& g) { out.push_back(g); });
  return out;
}

// <u, v> = u J conj(v)^T
Elem form(const FiniteField& f, const FqMatrix& j, const Vec4& u, const Vec4& v) {
  Elem acc = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (j(a, b) != 0 && u[a] != 0 && v[b] != 0) acc = f.add(acc, f.mul(f.mul(u[a], j(a, b)), f.conj(v[b])));
  return acc;
}

std::vector<FqMatrix> enumerate_gu_shape(const FiniteField& f, const Mask& mask) {
  const FqMatrix j = j4(f);
  std::vector<FqMatrix> out;
  for (unsigned nu = 1; nu < f.p(); ++nu) {
    const Elem n = static_cast<Elem>(nu);
    auto accept = [&](const std::vector<Vec4>& rows) {
      const std::size_t k = rows.size() - 1;
      for (std::size_t i = 0; i <= k; ++i) {
        if (form(f, j, rows[k], rows[i]) != f.mul(n, j(static_cast<int>(k), static_cast<int>(i)))) return false;
        if (form(f, j, rows[i], rows[k]) != f.mul(n, j(static_cast<int>(i), static_cast<int>(k)))) return false;
      }
      return true;
    };
    enumerate_rows(f, mask, accept, [&](const FqMatrix& g) { out.push_back(g); });
  }
  return out;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::uint64_t gl2_order(std::uint64_t q) { return (q * q - 1) * (q * q - q); }

Key line_key(const FiniteField& f, const Vec4& v) { return ff::subspace_key(f, {v}); }

// Q-coset invariant for GL4: the flag <b4 g> in <b2 g, b3 g, b4 g>.
Key flag_of(const FqMatrix& g) {
  const FiniteField& f = g.field();
  Key k = line_key(f, g.row(3));
  const Key h = ff::subspace_key(f, {g.row(1), g.row(2), g.row(3)});
  k.insert(k.end(), h.begin(), h.end());
  return k;
}

Key isotropic_line_of(const FqMatrix& g) { return line_key(g.field(), g.row(3)); }

std::string key_str(const FiniteField& f, const Key& k) {
  std::string s;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i && i % 4 == 0) s += "|";
    else if (i) s += " ";
    s += f.str(k[i]);
  }
  return s;
}

/// Orbits of P (given by generators acting as g -> g x) on the Q-cosets,
/// grown from the listed representatives first, then from any point of
/// `all_points` still uncovered. Returns the orbit index of every point.
std::map<Key, int> grow_orbits(CosetDecomposition& d, const std::vector<FqMatrix>& gens,
                 const std::function<Key(const FqMatrix&)>& invariant,
                 const std::map<Key, std::optional<FqMatrix>>& all_points) {
  const FiniteField& f = gens.front().field();
  std::map<Key, int> orbit_of;
  auto grow = [&](const Key& start, const std::optional<FqMatrix>& rep) {
    const int id = static_cast<int>(d.cosets.size());
    DoubleCoset c;
    c.representative = rep;
    c.witness = key_str(f, start);
    std::deque<std::pair<Key, std::optional<FqMatrix>>> queue{{start, rep}};
    orbit_of[start] = id;
    while (!queue.empty()) {
      auto [k, g] = queue.front();
      queue.pop_front();
      ++c.q_cosets;
      if (!g) continue;  // a coset without a matrix cannot be moved
      for (const auto& x : gens) {
        FqMatrix h = *g * x;
        Key hk = invariant(h);
        if (orbit_of.try_emplace(hk, id).second) queue.emplace_back(std::move(hk), std::move(h));
      }
    }
    c.size = c.q_cosets * d.order_Q;
    d.cosets.push_back(std::move(c));
  };
  for (auto& rep : d.listed) {
    const Key k = invariant(rep.matrix);
    auto it = orbit_of.find(k);
    if (it != orbit_of.end()) {
      rep.coset = it->second;
      continue;
    }
    rep.coset = static_cast<int>(d.cosets.size());
    grow(k, rep.matrix);
  }
  for (const auto& [k, g] : all_points)
    if (!orbit_of.count(k)) grow(k, g);
  return orbit_of;
}

void classify_listing(CosetDecomposition& d, const std::map<Key, int>& orbit_of,
                      const std::function<Key(const FqMatrix&)>& invariant, const FqMatrix& g) {
  ++d.listed_order;
  auto it = orbit_of.find(invariant(g));
  if (it != orbit_of.end()) ++d.listing_sizes[it->second];
}

/// Every flag line < hyperplane with a matrix realizing it.
std::map<Key, std::optional<FqMatrix>> all_flags(const FiniteField& f) {
  std::map<Key, std::optional<FqMatrix>> out;
  std::vector<Vec4> vectors;
  for (unsigned n = 1; n < ipow(f.size(), 4); ++n) {
    Vec4 v;
    unsigned m = n;
    for (int j = 0; j < 4; ++j) {
      v[j] = static_cast<Elem>(m % f.size());
      m /= f.size();
    }
    vectors.push_back(v);
  }
  std::set<Key> lines;
  for (const auto& v : vectors) {
    if (!lines.insert(line_key(f, v)).second) continue;
    for (const auto& u : vectors)
      for (const auto& w : vectors) {
        if (!independent_rows(f, {v, u, w})) continue;
        FqMatrix g(f);
        const std::array<Vec4, 3> low{u, w, v};
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 4; ++j) g(i + 1, j) = low[i][j];
        for (int e = 0; e < 4; ++e) {
          Vec4 b{0, 0, 0, 0};
          b[e] = 1;
          if (independent_rows(f, {b, u, w, v})) {
            for (int j = 0; j < 4; ++j) g(0, j) = b[j];
            break;
          }
        }
        out.try_emplace(flag_of(g), g);
      }
  }
  return out;
}

void require_prime_field_size(unsigned p, bool unitary) {
  if (!ff::is_prime(p)) throw ResourceGuardError("characteristic " + std::to_string(p) + " is not prime");
  if (unitary ? p != 2 : (p != 2 && p != 3))
    throw ResourceGuardError(std::string(unitary ? "GU4" : "GL4") + " enumeration is limited to p in " +
                             (unitary ? "{2}" : "{2, 3}") + "; got " + std::to_string(p));
}

}  // namespace

std::uint64_t CosetDecomposition::size_sum() const {
  std::uint64_t s = 0;
  for (const auto& c : cosets) s += c.size;
  return s;
}

bool CosetDecomposition::listed_distinct() const {
  std::vector<int> hits(cosets.size(), 0);
  for (const auto& r : listed) {
    if (r.coset < 0 || r.coset >= static_cast<int>(cosets.size())) return false;
    ++hits[r.coset];
  }
  for (int h : hits)
    if (h != 1) return false;
  return true;
}

std::uint64_t gl4_order(unsigned p) {
  std::uint64_t n = 1;
  const std::uint64_t q4 = ipow(p, 4);
  for (unsigned i = 0; i < 4; ++i) n *= q4 - ipow(p, i);
  return n;
}

std::uint64_t gu4_order(unsigned p) {
  const std::uint64_t q = p;
  return ipow(q, 6) * (q + 1) * (q * q - 1) * (ipow(q, 3) + 1) * (ipow(q, 4) - 1) * (q - 1);
}

FqMatrix gamma(const FiniteField& f, int i) {
  if (i == 1) return FqMatrix::permutation(f, {2, 3, 1, 4});  // (123)
  if (i == 2) return FqMatrix::permutation(f, {1, 4, 2, 3});  // (243)
  throw std::invalid_argument("gamma index must be 1 or 2");
}

bool stabilizes(const FqMatrix& g, const FqMatrix& x) { return flag_of(g * x) == flag_of(g); }

std::vector<FqMatrix> unipotent_radical(const FiniteField& f, int i) {
  // P_{3,1}: last column above the diagonal; P_{1,3}: first row right of it.
  std::array<std::pair<int, int>, 3> pos;
  if (i == 1) pos = {{{0, 3}, {1, 3}, {2, 3}}};
  else if (i == 2) pos = {{{0, 1}, {0, 2}, {0, 3}}};
  else throw std::invalid_argument("unipotent radical index must be 1 or 2");
  std::vector<FqMatrix> out;
  const unsigned q = f.size();
  for (unsigned n = 0; n < q * q * q; ++n) {
    FqMatrix u = FqMatrix::identity(f);
    u(pos[0].first, pos[0].second) = static_cast<Elem>(n % q);
    u(pos[1].first, pos[1].second) = static_cast<Elem>((n / q) % q);
    u(pos[2].first, pos[2].second) = static_cast<Elem>(n / (q * q));
    out.push_back(u);
  }
  return out;
}

bool check_stabilizer_unipotent(int i, unsigned p, bool inject_fault) {
  require_prime_field_size(p, false);
  const FiniteField& f = ff::shared_field(p, 1);
  const FqMatrix g = gamma(f, i);
  for (const auto& u : unipotent_radical(f, inject_fault ? 3 - i : i))
    if (!stabilizes(g, u)) return false;
  return true;
}

std::vector<FqMatrix> gl4_P_generators(const FiniteField& f) {
  std::vector<FqMatrix> gens;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && p_mask()[4 * i + j]) {
        FqMatrix e = FqMatrix::identity(f);
        e(i, j) = 1;
        gens.push_back(e);
      }
  // a generator of the cyclic group F_p^x
  Elem gen = 1;
  for (unsigned c = 1; c < f.size(); ++c) {
    unsigned order = 1;
    for (Elem x = static_cast<Elem>(c); x != 1; x = f.mul(x, static_cast<Elem>(c))) ++order;
    if (order == f.size() - 1) {
      gen = static_cast<Elem>(c);
      break;
    }
  }
  if (gen != 1)
    for (int i = 0; i < 4; ++i) {
      FqMatrix d = FqMatrix::identity(f);
      d(i, i) = gen;
      gens.push_back(d);
    }
  return gens;
}

CosetDecomposition enumerate_gl4_double_cosets(unsigned p, bool inject_fault) {
  require_prime_field_size(p, false);
  const FiniteField& f = ff::shared_field(p, 1);
  CosetDecomposition d;
  d.group = "GL4(F_" + std::to_string(p) + ")";
  d.p = p;
  d.total = gl4_order(p);
  d.order_P = enumerate_gl_shape(f, p_mask()).size();
  d.order_Q = enumerate_gl_shape(f, q_flag_mask()).size();
  d.formula_P = gl2_order(p) * gl2_order(p) * ipow(p, 4);
  d.formula_Q = (p - 1) * (p - 1) * gl2_order(p) * ipow(p, 5);

  const FqMatrix nu_p = FqMatrix::from_ints(f, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
  const FqMatrix nu_q = FqMatrix::from_ints(f, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
  // permutation matrices are orthogonal
  const FqMatrix nu = nu_p * nu_q.conj_transpose();
  if (!(nu == FqMatrix::permutation(f, {2, 4, 1, 3})))
    throw std::logic_error("nu_P nu_Q^{-1} is not the permutation matrix of (1243)");
  d.listed = {{"nu_P nu_Q^-1 = (1243)", nu},
              {"1", FqMatrix::identity(f)},
              {"gamma_1 = (123)", gamma(f, 1)},
              {"gamma_2 = (243)", gamma(f, 2)}};
  // an element of Q gamma_1 P standing in for gamma_2
  if (inject_fault) d.listed[3].matrix = gamma(f, 1) * gl4_P_generators(f).front();

  const auto orbit_of = grow_orbits(d, gl4_P_generators(f), flag_of, all_flags(f));

  if (p == 2) {
    d.listing_sizes.assign(d.cosets.size(), 0);
    enumerate_rows(
        f, full_mask(), [&](const std::vector<Vec4>& rows) { return independent_rows(f, rows); },
        [&](const FqMatrix& g) { classify_listing(d, orbit_of, flag_of, g); });
  }
  return d;
}

FqMatrix j4(const FiniteField& f) {
  return FqMatrix::from_ints(f, {0, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0, -1, 0, 0, 0});
}

CosetDecomposition enumerate_gu4_double_cosets(unsigned p, bool inject_fault) {
  require_prime_field_size(p, true);
  const FiniteField& f = ff::shared_field(p, 2);
  CosetDecomposition d;
  d.group = "GU(2,2)(F_" + std::to_string(p * p) + "/F_" + std::to_string(p) + ")";
  d.p = p;
  d.total = gu4_order(p);
  const std::vector<FqMatrix> parabolic_p = enumerate_gu_shape(f, p_mask());
  d.order_P = parabolic_p.size();
  d.order_Q = enumerate_gu_shape(f, q_line_mask()).size();
  const std::uint64_t q = p;
  d.formula_P = gl2_order(q * q) * (q - 1) * ipow(q, 4);
  d.formula_Q = (q * q - 1) * (q * (q + 1) * (q * q - 1) * (q - 1)) * ipow(q, 5);

  const FqMatrix nu_p = FqMatrix::from_ints(f, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
  const FqMatrix nu_q = FqMatrix::from_ints(f, {1, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 1});
  d.listed = {{"1", FqMatrix::identity(f)}, {"nu_P nu_Q^-1", nu_p * nu_q.conj_transpose()}};
  if (inject_fault) d.listed[1].matrix = parabolic_p.back();

  // isotropic lines <f1 g>, each with one g in G realizing it
  const std::vector<FqMatrix> group = enumerate_gu_shape(f, full_mask());
  std::map<Key, std::optional<FqMatrix>> lines;
  for (const auto& g : group) lines.try_emplace(isotropic_line_of(g), g);
  const auto orbit_of = grow_orbits(d, parabolic_p, isotropic_line_of, lines);

  d.listing_sizes.assign(d.cosets.size(), 0);
  for (const auto& g : group) classify_listing(d, orbit_of, isotropic_line_of, g);
  return d;
}

std::string describe(const CosetDecomposition& d) {
  std::ostringstream os;
  os << d.group << ": " << d.cosets.size() << " double cosets, |G| = " << d.total << ", |P| = " << d.order_P
     << " (formula " << d.formula_P << "), |Q| = " << d.order_Q << " (formula " << d.formula_Q << ")\n";
  for (std::size_t c = 0; c < d.cosets.size(); ++c) {
    os << "  coset " << c << ": size " << d.cosets[c].size << " (" << d.cosets[c].q_cosets << " Q-cosets)";
    for (const auto& r : d.listed)
      if (r.coset == static_cast<int>(c)) os << " <- " << r.label;
    os << "\n";
  }
  return os.str();
}

}  // namespace rsv::cosets
