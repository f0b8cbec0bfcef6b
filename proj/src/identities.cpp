#include "rsverify/identities.hpp"

#include <memory>
#include <mutex>
#include <set>
#include <tuple>

namespace rsv::verify {

namespace {

QMonomial unit_monomial(std::size_t arity) { return QMonomial{0, std::vector<int>(arity, 0)}; }

QMonomial q_mono(int qp, std::vector<int> e) { return QMonomial{qp, std::move(e)}; }

/// 1 / p(T) with T -> |p|^{arg}.
MSeries euler_series(const RecipPoly& p, const SubstitutionTable& table, const AffineForm& arg,
                     const Rat& q, unsigned degree) {
  const QMonomial m = table.rewrite(arg);
  return series_from_recip(p, m.monomial(table.vars()), pow(q, m.q_power), table.vars(), degree);
}

/// p(T) with T -> |p|^{arg}.
MSeries poly_series(const RecipPoly& p, const SubstitutionTable& table, const AffineForm& arg,
                    const Rat& q, unsigned degree) {
  const QMonomial m = table.rewrite(arg);
  return series_from_poly(p, m.monomial(table.vars()), pow(q, m.q_power), table.vars(), degree);
}

const RecipPoly& one_minus_t() {
  static const RecipPoly p("T", {Rat(1), Rat(-1)});
  return p;
}

AffineForm W() { return AffineForm::param("w"); }
AffineForm S() { return AffineForm::param("s"); }
AffineForm S1() { return AffineForm::param("s1"); }
AffineForm S2() { return AffineForm::param("s2"); }

}  // namespace

Outcome first_discrepancy(const MSeries& lhs, const MSeries& rhs) {
  if (lhs.vars() != rhs.vars() || lhs.degree() != rhs.degree())
    throw StructuralError("compared series differ in variables or truncation");
  auto a = lhs.terms().begin();
  auto b = rhs.terms().begin();
  const auto ae = lhs.terms().end();
  const auto be = rhs.terms().end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->first < b->first)) return Discrepancy{lhs.monomial_of(a->first).str(), a->second, 0};
    if (a == ae || b->first < a->first) return Discrepancy{rhs.monomial_of(b->first).str(), 0, b->second};
    if (a->second != b->second) return Discrepancy{lhs.monomial_of(a->first).str(), a->second, b->second};
    ++a;
    ++b;
  }
  return std::nullopt;
}

Outcome first_discrepancy(const RecipPoly& lhs, const RecipPoly& rhs, const std::string& label) {
  const std::size_t n = std::max(lhs.coeffs().size(), rhs.coeffs().size());
  for (std::size_t k = 0; k < n; ++k) {
    const Rat l = k < lhs.coeffs().size() ? lhs.coeffs()[k] : Rat(0);
    const Rat r = k < rhs.coeffs().size() ? rhs.coeffs()[k] : Rat(0);
    if (l != r) return Discrepancy{label + ": coefficient of " + lhs.var() + "^" + std::to_string(k), l, r};
  }
  return std::nullopt;
}

// ------------------------------------------------------- inner integrals

Rat shell_integral_oracle(unsigned vb, int k, const Rat& q) {
  if (k <= 0) throw MathError("shell index must be positive");
  // integral of psi(b y) over p^{-j} O: psi(b .) is trivial there iff
  // val(b) - j >= 0, and then the integral is the volume |p|^{-j} = q^{-j}.
  auto ball = [&](int j) -> Rat { return static_cast<int>(vb) - j >= 0 ? pow(q, -j) : Rat(0); };
  return ball(k) - ball(k - 1);
}

Rat inner_integral_closed(unsigned m, const Rat& x, const Rat& q) {
  if (x == 1) throw MathError("inner integral closed form has a pole at x = 1");
  return (1 - q * x) * (1 - pow(x, static_cast<int>(m) + 1)) / (1 - x);
}

Rat inner_integral_shell_sum(unsigned m, const Rat& x, const Rat& q) {
  Rat total = 1;
  const Rat weight = q * x;  // |y|^{-S} = |p|^{kS} on the k-th shell
  // shells beyond m+1 contribute nothing
  for (int k = 1; k <= static_cast<int>(m) + 1; ++k) total += shell_integral_oracle(m, k, q) * pow(weight, k);
  return total;
}

// ------------------------------------------------------------ GL4 side

std::vector<QMonomial> GeomFactorSpec::terms() const {
  std::vector<QMonomial> out;
  for (unsigned i = 0; i <= bound; ++i) out.push_back(lead.pow(bound - i) * partner.pow(i));
  return out;
}

CharacterFn characters_at(const SatakePointA3& pt) {
  struct Memo {
    std::mutex mu;
    std::map<WeightA3, Rat> values;
  };
  auto memo = std::make_shared<Memo>();
  return [memo, pt](const WeightA3& w) -> Rat {
    {
      std::lock_guard lock(memo->mu);
      auto it = memo->values.find(w);
      if (it != memo->values.end()) return it->second;
    }
    Rat v = schur_A3(w, pt);
    std::lock_guard lock(memo->mu);
    return memo->values.try_emplace(w, std::move(v)).first->second;
  };
}

MSeries lhs_gl4_sum(const CharacterFn& chars, unsigned degree) {
  MSeries out(kXYZ, degree);
  const QMonomial x = q_mono(0, {1, 0, 0}), y = q_mono(0, {0, 1, 0}), z = q_mono(0, {0, 0, 1});
  const QMonomial none = unit_monomial(3);
  MSeries::Exponents e(3);
  for (unsigned l = 0; l <= degree; ++l)
    for (unsigned m = 0; l + m <= degree; ++m)
      for (unsigned n = 0; l + m + n <= degree; ++n) {
        const Rat k = chars(WeightA3{l, m, n});
        if (k == 0) continue;
        const GeomFactorSpec fy{m, none, x * z};
        const GeomFactorSpec fx{l, x, y * z};
        const GeomFactorSpec fz{n, z, x * y};
        const QMonomial ym = y.pow(m);
        for (const auto& ty : fy.terms())
          for (const auto& tx : fx.terms())
            for (const auto& tz : fz.terms()) {
              const QMonomial t = ym * ty * tx * tz;
              for (std::size_t i = 0; i < 3; ++i) e[i] = static_cast<unsigned>(t.exponents[i]);
              out.add_term(e, k);
            }
      }
  return out;
}

MSeries lhs_gl4_sum(const SatakePointA3& pt, unsigned degree) {
  return lhs_gl4_sum(characters_at(pt), degree);
}

MSeries rhs_character_product(const CharacterFn& chars, unsigned degree) {
  MSeries xz(kXYZ, degree), yy(kXYZ, degree);
  for (unsigned t = 0; t <= degree; ++t)
    for (unsigned v = 0; t + v <= degree; ++v) xz.add_term({t, 0, v}, chars(WeightA3{t, 0, v}));
  for (unsigned u = 0; u <= degree; ++u) yy.add_term({0, u, 0}, chars(WeightA3{0, u, 0}));
  return xz * yy;
}

Outcome check_lemma_2_2(const SatakePointA3& pt, unsigned degree, bool inject_fault) {
  const CharacterFn chars = characters_at(pt);
  CharacterFn lhs_chars = chars;
  if (inject_fault)
    lhs_chars = [chars](const WeightA3& w) { return w == WeightA3{0, 1, 0} ? chars(w) + 1 : chars(w); };
  return first_discrepancy(lhs_gl4_sum(lhs_chars, degree), rhs_character_product(chars, degree));
}

Outcome check_littlewood_closures(const SatakePointA3& pt, unsigned degree, bool inject_fault) {
  const CharacterFn chars = characters_at(pt);
  const auto X = Monomial::var("X"), Y = Monomial::var("Y"), Z = Monomial::var("Z");
  const RecipPoly lstd = lfactor_gl4(GL4Rep::Std, pt);
  const RecipPoly lw2 = lfactor_gl4(GL4Rep::Wedge2, pt);
  const RecipPoly lw3 = lfactor_gl4(GL4Rep::Wedge3, pt);

  MSeries sym(kXYZ, degree), wedge(kXYZ, degree), mixed(kXYZ, degree);
  for (unsigned t = 0; t <= degree; ++t) sym.add_term({t, 0, 0}, chars(WeightA3{t, 0, 0}));
  for (unsigned u = 0; u <= degree; ++u) wedge.add_term({0, u, 0}, chars(WeightA3{0, u, 0}));
  for (unsigned t = 0; t <= degree; ++t)
    for (unsigned v = 0; t + v <= degree; ++v) {
      Rat c = chars(WeightA3{t, 0, v});
      if (inject_fault && t == 1 && v == 1) c += 1;
      mixed.add_term({t, 0, v}, c);
    }

  const MSeries one_minus_y2 =
      series_from_poly(RecipPoly("T", {Rat(1), Rat(0), Rat(-1)}), Y, 1, kXYZ, degree);
  const MSeries one_minus_xz = series_from_poly(one_minus_t(), X * Z, 1, kXYZ, degree);

  const MSeries std_series = series_from_recip(lstd, X, 1, kXYZ, degree);
  if (auto d = first_discrepancy(sym, std_series)) return Discrepancy{"Sym: " + d->location, d->lhs, d->rhs};
  const MSeries w2_series = one_minus_y2 * series_from_recip(lw2, Y, 1, kXYZ, degree);
  if (auto d = first_discrepancy(wedge, w2_series)) return Discrepancy{"wedge2: " + d->location, d->lhs, d->rhs};
  const MSeries mixed_series =
      one_minus_xz * std_series * series_from_recip(lw3, Z, 1, kXYZ, degree);
  if (auto d = first_discrepancy(mixed, mixed_series))
    return Discrepancy{"Std x wedge3: " + d->location, d->lhs, d->rhs};
  return std::nullopt;
}

std::vector<std::pair<AffineForm, QMonomial>> gl4_expected_rewrites() {
  return {
      {W() * 4 - Rat(1), q_mono(0, {1, 0, 1})},                    // XZ
      {S2() * 4 - Rat(1), q_mono(0, {-1, 1, 1})},                  // YZ/X
      {S1() * 4 - Rat(1), q_mono(0, {1, 1, -1})},                  // XY/Z
      {W() * 4, q_mono(1, {1, 0, 1})},                              // q XZ
      {S1() * 4 + S2() * 4 - Rat(2), q_mono(0, {0, 2, 0})},        // Y^2
  };
}

std::vector<std::pair<AffineForm, QMonomial>> gu22_expected_rewrites() {
  return {
      {W() * 4 - Rat(1), q_mono(0, {2, 0})},  // U^2
      {W() * 4, q_mono(1, {2, 0})},           // q U^2
      {S() * 3, q_mono(1, {0, 1})},           // q V
      {S() * 6 - Rat(2), q_mono(0, {0, 2})},  // V^2
  };
}

MSeries gl4_local_integral(const SatakePointA3& pt, const Rat& q, unsigned degree, const CharacterFn& given) {
  const SubstitutionTable& table = gl4_table();
  table.self_check(gl4_expected_rewrites());
  const CharacterFn chars = given ? given : characters_at(pt);
  const Rat quarter(1, 4), half(1, 2);

  // ratio |p|^{S-1} of each inner integral: S = 4w (valuation m), 4s2 (l), 4s1 (n)
  const QMonomial ry = table.rewrite(W() * 4 - Rat(1));
  const QMonomial rx = table.rewrite(S2() * 4 - Rat(1));
  const QMonomial rz = table.rewrite(S1() * 4 - Rat(1));
  const QMonomial none = unit_monomial(3);

  MSeries sum(kXYZ, degree);
  for (unsigned l = 0; l <= degree; ++l)
    for (unsigned m = 0; l + m <= degree; ++m)
      for (unsigned n = 0; l + m + n <= degree; ++n) {
        const Rat k = chars(WeightA3{l, m, n});
        if (k == 0) continue;
        const Rat L(l), M(m), N(n);
        const AffineForm torus = (W() * 2 - half) * (L + N) + (S1() - quarter) * (L + 2 * M - N) +
                                 (S2() - quarter) * (2 * M + N - L);
        const QMonomial base = table.rewrite(torus);
        for (const auto& ty : GeomFactorSpec{m, none, ry}.terms())
          for (const auto& tx : GeomFactorSpec{l, none, rx}.terms())
            for (const auto& tz : GeomFactorSpec{n, none, rz}.terms()) {
              const QMonomial t = base * ty * tx * tz;
              sum.add_term(t.monomial(kXYZ), k * pow(q, t.q_power));
            }
      }
  // zeta(4w)^{-1} from the y-integral: (1 - |p|^{4w}) * sum_{beta<=m} (|p|^{4w-1})^beta
  return poly_series(one_minus_t(), table, W() * 4, q, degree) * sum;
}

MSeries thm_2_1_rhs(const SatakePointA3& pt, const Rat& q, unsigned degree) {
  const SubstitutionTable& table = gl4_table();
  table.self_check(gl4_expected_rewrites());
  const Rat half(1, 2);
  MSeries r = euler_series(lfactor_gl4(GL4Rep::Std, pt), table, W() * 2 + S1() - S2() - half, q, degree);
  r *= euler_series(lfactor_gl4(GL4Rep::Wedge2, pt), table, S1() * 2 + S2() * 2 - Rat(1), q, degree);
  r *= euler_series(lfactor_gl4(GL4Rep::Wedge3, pt), table, W() * 2 - S1() + S2() - half, q, degree);
  r *= poly_series(one_minus_t(), table, W() * 4, q, degree);
  r *= poly_series(one_minus_t(), table, W() * 4 - Rat(1), q, degree);
  r *= poly_series(one_minus_t(), table, S1() * 4 + S2() * 4 - Rat(2), q, degree);
  return r;
}

Outcome check_thm_2_1(const SatakePointA3& pt, const Rat& q, unsigned degree, bool inject_fault) {
  if (!(q > 0 && q < 1)) throw MathError("|p| must lie in (0, 1)");
  const MSeries lhs = gl4_local_integral(pt, q, degree);
  // the fault evaluates the right side at the wrong residue size
  const MSeries rhs = thm_2_1_rhs(pt, inject_fault ? q / 2 : q, degree);
  return first_discrepancy(lhs, rhs);
}

// ----------------------------------------------------------- GU(2,2) side

WeightC2 kg_weight(unsigned m, unsigned n, C2Dictionary dict) {
  return dict == C2Dictionary::SpinFromN ? WeightC2{n, m} : WeightC2{m, n};
}

MSeries lhs_gu22_inert_sum(const SatakePointC2& pt, unsigned degree, C2Dictionary dict) {
  MSeries out(kUV, degree);
  const QMonomial u2 = q_mono(0, {2, 0}), v = q_mono(0, {0, 1}), v2 = q_mono(0, {0, 2});
  const QMonomial none = unit_monomial(2);
  for (unsigned m = 0; 2 * m <= degree; ++m)
    for (unsigned n = 0; 2 * m + n <= degree; ++n) {
      const Rat k = char_C2_total(kg_weight(m, n, dict), pt);
      if (k == 0) continue;
      const QMonomial base = v.pow(n) * u2.pow(m);
      for (const auto& tu : GeomFactorSpec{n, none, u2}.terms())
        for (const auto& tv : GeomFactorSpec{m, none, v2}.terms()) {
          const QMonomial t = base * tu * tv;
          out.add_term({static_cast<unsigned>(t.exponents[0]), static_cast<unsigned>(t.exponents[1])}, k);
        }
    }
  return out;
}

Outcome check_bfg_identity(const SatakePointC2& pt, unsigned degree, C2Dictionary dict, bool inject_fault) {
  MSeries lhs = lhs_gu22_inert_sum(pt, degree, dict);
  if (inject_fault) lhs.add_term(Monomial{{"U", 2}, {"V", 1}}, 1);
  const auto U = Monomial::var("U"), V = Monomial::var("V");
  const MSeries rhs = series_from_poly(RecipPoly("T", {Rat(1), Rat(-1)}), U.pow(4), 1, kUV, degree) *
                      series_from_recip(lfactor_gsp4(GSp4Rep::Std, pt), U.pow(2), 1, kUV, degree) *
                      series_from_recip(lfactor_gsp4(GSp4Rep::Spin, pt), V, 1, kUV, degree);
  return first_discrepancy(lhs, rhs);
}

Outcome check_prop_gsp4L(const Rat& a, const Rat& b, bool inject_fault) {
  const TwistedClass cls{1, a, b, true};
  const SatakePointC2 gsp = gsp4_point(cls);
  const RecipPoly omega2("T", {Rat(1), Rat(0), Rat(-1)});  // L(omega, 2s)^{-1}, omega trivial

  RecipPoly wedge = lfactor_gu22_inert(GU22Rep::Wedge2, cls);
  if (inject_fault) wedge = (wedge2_rep(cls.lambda, cls.g()) * (a_matrix() * Rat(-1))).reciprocal_charpoly();
  const RecipPoly standard = lfactor_gu22_inert(GU22Rep::Std, cls);

  if (wedge.degree() != 6) return Discrepancy{"degree of twisted wedge2 factor", Rat(wedge.degree()), 6};
  if (standard.degree() != 8) return Discrepancy{"degree of twisted Std factor", Rat(standard.degree()), 8};
  if (!standard.is_even()) return Discrepancy{"parity of twisted Std factor", 1, 0};
  if (auto d = first_discrepancy(wedge, lfactor_gsp4(GSp4Rep::Spin, gsp) * omega2, "wedge2 = Spin * L(omega,2s)"))
    return d;
  if (auto d = first_discrepancy(standard * omega2, lfactor_gsp4(GSp4Rep::Std, gsp).in_square(),
                                 "Std * L(omega,2w)^{-1} = GSp4 Std at 2w"))
    return d;
  return std::nullopt;
}

Outcome check_thm_3_2_inert(const Rat& a, const Rat& b, const Rat& q, unsigned degree, bool inject_fault) {
  const SubstitutionTable& table = gu22_table();
  table.self_check(gu22_expected_rewrites());
  const EulerContext ctx(q, SplitType::Inert);
  const TwistedClass cls{1, a, b, true};
  const Rat half(1, 2);

  // I = I_1 / (zeta_F(4w) zeta_E(3s))
  const MSeries zeta_prefactor = poly_series(zeta_factors(ctx, ZetaKind::ZetaF), table, W() * 4, q, degree) *
                                 poly_series(zeta_factors(ctx, ZetaKind::ZetaE), table, S() * 3, q, degree);
  const MSeries lhs = zeta_prefactor * lhs_gu22_inert_sum(gsp4_point(cls), degree);

  const RecipPoly eps = inject_fault ? zeta_factors(EulerContext(q, SplitType::Split), ZetaKind::EpsEF)
                                     : zeta_factors(ctx, ZetaKind::EpsEF);
  MSeries rhs = euler_series(lfactor_gu22_inert(GU22Rep::Std, cls), table, W() * 2 - half, q, degree);
  rhs *= euler_series(lfactor_gu22_inert(GU22Rep::Wedge2, cls), table, S() * 3 - Rat(1), q, degree);
  rhs *= poly_series(eps, table, W() * 4 - Rat(1), q, degree);
  rhs *= zeta_prefactor;
  rhs *= poly_series(zeta_factors(ctx, ZetaKind::ZetaF), table, S() * 6 - Rat(2), q, degree);
  return first_discrepancy(lhs, rhs);
}

std::vector<ArgumentAuditRow> split_argument_audit(const Rat& exponent) {
  const std::map<std::string, AffineForm> spec{{"s1", S() * exponent}, {"s2", S() * exponent}};
  const Rat half(1, 2);
  const std::vector<std::tuple<std::string, AffineForm, AffineForm>> rows{
      {"L(Std) -> L(lambda x Std)", W() * 2 + S1() - S2() - half, W() * 2 - half},
      {"L(wedge3) -> L(lambda x wedge3)", W() * 2 - S1() + S2() - half, W() * 2 - half},
      {"L(wedge2) -> L(lambda x wedge2)", S1() * 2 + S2() * 2 - Rat(1), S() * 3 - Rat(1)},
      {"zeta(4w) -> zeta_F(4w)", W() * 4, W() * 4},
      {"zeta(4s1) -> zeta_E(3s), first place", S1() * 4, S() * 3},
      {"zeta(4s2) -> zeta_E(3s), second place", S2() * 4, S() * 3},
      {"zeta(4w-1) -> L(eps, 4w-1)", W() * 4 - Rat(1), W() * 4 - Rat(1)},
      {"zeta(4s1+4s2-2) -> zeta_F(6s-2)", S1() * 4 + S2() * 4 - Rat(2), S() * 6 - Rat(2)},
  };
  std::vector<ArgumentAuditRow> out;
  for (const auto& [name, gl, gu] : rows) {
    const AffineForm sp = gl.substitute(spec);
    out.push_back({name, gl, sp, gu, sp == gu});
  }
  return out;
}

Outcome check_thm_3_2_split(const SatakePointA3& pt, const Rat& lambda, const Rat& q, unsigned degree,
                            bool inject_fault) {
  if (lambda != 1) throw MathError("split reduction assumes trivial central character (lambda = 1)");
  const Rat exponent = inject_fault ? Rat(2, 3) : Rat(3, 4);
  for (const auto& row : split_argument_audit(exponent))
    if (!row.matches) return Discrepancy{"argument audit: " + row.factor + " gives " + row.specialized.str() +
                                             " instead of " + row.gu22_argument.str(), 0, 0};

  const SubstitutionTable& gl = gl4_table();
  const SubstitutionTable& gu = gu22_table();
  gu.self_check(gu22_expected_rewrites());
  const std::map<std::string, AffineForm> spec{{"s1", S() * exponent}, {"s2", S() * exponent}};

  // X, Y, Z as monomials in U, V after the specialization
  std::map<std::string, std::pair<Rat, Monomial>> images;
  for (std::size_t i = 0; i < gl.vars().size(); ++i) {
    const QMonomial m = gu.rewrite(gl.definition(i).substitute(spec));
    images[gl.vars()[i]] = {pow(q, m.q_power), m.monomial(kUV)};
  }
  MSeries lhs = gl4_local_integral(pt, q, degree).substitute(kUV, degree, images);
  // restore zeta(4s1)^{-1} zeta(4s2)^{-1}, now genuine power series in V
  lhs *= poly_series(one_minus_t(), gu, (S1() * 4).substitute(spec), q, degree);
  lhs *= poly_series(one_minus_t(), gu, (S2() * 4).substitute(spec), q, degree);

  const EulerContext ctx(q, SplitType::Split);
  const Rat half(1, 2);
  MSeries rhs = euler_series(lfactor_gu22_split(GU22Rep::Std, lambda, pt), gu, W() * 2 - half, q, degree);
  rhs *= euler_series(lfactor_gu22_split(GU22Rep::Wedge2, lambda, pt), gu, S() * 3 - Rat(1), q, degree);
  rhs *= poly_series(zeta_factors(ctx, ZetaKind::EpsEF), gu, W() * 4 - Rat(1), q, degree);
  rhs *= poly_series(zeta_factors(ctx, ZetaKind::ZetaF), gu, W() * 4, q, degree);
  rhs *= poly_series(zeta_factors(ctx, ZetaKind::ZetaE), gu, S() * 3, q, degree);
  rhs *= poly_series(zeta_factors(ctx, ZetaKind::ZetaF), gu, S() * 6 - Rat(2), q, degree);
  return first_discrepancy(lhs, rhs);
}

}  // namespace rsv::verify
