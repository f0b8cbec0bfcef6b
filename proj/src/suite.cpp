#include "rsverify/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "rsverify/cosets.hpp"
#include "rsverify/littlewood.hpp"
#include "rsverify/sampling.hpp"

namespace rsv::suite {

using nlohmann::json;
using verify::Discrepancy;
using verify::Outcome;

namespace {

struct Context {
  const SuiteConfig& cfg;
  Sampler rng;
  bool fault;
  json params = json::object();
  json points = json::array();
};

using CheckFn = std::function<Outcome(Context&)>;

Discrepancy at_trial(unsigned trial, const std::string& point, Discrepancy d) {
  d.location = "trial " + std::to_string(trial) + " at " + point + ": " + d.location;
  return d;
}

Discrepancy named(std::string location, const Rat& lhs, const Rat& rhs) {
  return Discrepancy{std::move(location), lhs, rhs};
}

/// Runs `body` on `trials` sampled points, stopping at the first discrepancy.
template <typename Draw, typename Body>
Outcome over_trials(Context& c, unsigned trials, Draw draw, Body body) {
  for (unsigned t = 0; t < trials; ++t) {
    auto sample = draw();
    const std::string desc = sample.second;
    c.points.push_back(desc);
    if (auto d = body(sample.first)) return at_trial(t, desc, *d);
  }
  return std::nullopt;
}

std::string pair_str(const Rat& a, const Rat& b) { return "(" + to_string(a) + "," + to_string(b) + ")"; }

// ------------------------------------------------------------- checks

Outcome check_lemma(Context& c) {
  c.params["degree"] = c.cfg.degree;
  return over_trials(
      c, c.cfg.trials,
      [&] {
        auto pt = c.rng.a3_point(c.cfg.sample_bound);
        return std::pair{pt, pt.str()};
      },
      [&](const SatakePointA3& pt) { return verify::check_lemma_2_2(pt, c.cfg.degree, c.fault); });
}

Outcome check_closures(Context& c) {
  c.params["degree"] = c.cfg.degree;
  return over_trials(
      c, c.cfg.trials,
      [&] {
        auto pt = c.rng.a3_point(c.cfg.sample_bound);
        return std::pair{pt, pt.str()};
      },
      [&](const SatakePointA3& pt) { return verify::check_littlewood_closures(pt, c.cfg.degree, c.fault); });
}

WeightMultiset closed_form_relaxed(unsigned t, unsigned u, unsigned v) {
  // the closed form with the lower bound on j + k removed
  WeightMultiset out;
  for (unsigned i = 0; i <= t; ++i)
    for (unsigned k = 0; k <= i; ++k)
      for (unsigned j = 0; i + j <= u; ++j)
        out[WeightA3{t + u - 2 * i - j, i + j - k, v + j + 2 * k >= u ? v + j + 2 * k - u : 0}] += 1;
  return out;
}

Outcome check_lr(Context& c) {
  const unsigned bound = std::min(c.cfg.degree, 4u);
  c.params["bound"] = bound;
  for (unsigned t = 0; t <= bound; ++t)
    for (unsigned u = 0; u <= bound; ++u)
      for (unsigned v = 0; v <= bound; ++v) {
        const WeightMultiset closed = c.fault ? closed_form_relaxed(t, u, v) : lr_closed_form(t, u, v);
        const WeightMultiset oracle = lr_oracle({t + v, v, v, 0}, {u, u, 0, 0});
        std::set<WeightA3> keys;
        for (const auto& [w, _] : closed) keys.insert(w);
        for (const auto& [w, _] : oracle) keys.insert(w);
        for (const auto& w : keys) {
          const auto a = closed.count(w) ? closed.at(w) : 0u;
          const auto b = oracle.count(w) ? oracle.at(w) : 0u;
          if (a != b)
            return named("(t,u,v)=(" + std::to_string(t) + "," + std::to_string(u) + "," + std::to_string(v) +
                             "): multiplicity of " + w.str(),
                         a, b);
        }
      }
  return std::nullopt;
}

Outcome check_characters(Context& c) {
  const unsigned bound = std::min(c.cfg.degree, 5u);
  c.params["weightBound"] = bound;
  const std::array<std::pair<WeightA3, std::uint64_t>, 3> dims{
      {{WeightA3{1, 0, 0}, 4}, {WeightA3{0, 1, 0}, 6}, {WeightA3{0, 0, 1}, 4}}};
  for (const auto& [w, d] : dims)
    if (tableau_count(w) != d) return named("dimension of " + w.str(), Rat(tableau_count(w)), Rat(d));

  if (auto d = over_trials(
          c, c.cfg.trials,
          [&] {
            auto pt = c.rng.a3_point(c.cfg.sample_bound, true);
            return std::pair{pt, pt.str()};
          },
          [&](const SatakePointA3& pt) -> Outcome {
            for (unsigned n1 = 0; n1 <= bound; ++n1)
              for (unsigned n2 = 0; n1 + n2 <= bound; ++n2)
                for (unsigned n3 = 0; n1 + n2 + n3 <= bound; ++n3) {
                  const WeightA3 w{n1, n2, n3};
                  const Rat tab = schur_A3(w, pt);
                  Rat wcf = schur_A3_wcf(w, pt);
                  if (c.fault && w == WeightA3{1, 0, 0}) wcf += 1;
                  if (tab != wcf) return named("SL4 character " + w.str(), tab, wcf);
                }
            return std::nullopt;
          }))
    return d;

  return over_trials(
      c, c.cfg.trials,
      [&] {
        auto pt = c.rng.c2_point(c.cfg.sample_bound, true);
        return std::pair{pt, pt.str()};
      },
      [&](const SatakePointC2& pt) -> Outcome {
        for (unsigned s = 0; s <= bound; ++s)
          for (unsigned t = 0; s + t <= bound; ++t) {
            const WeightC2 w{s, t};
            const Rat weyl = char_C2(w, pt), total = char_C2_total(w, pt);
            if (weyl != total) return named("Sp4 character " + w.str(), weyl, total);
          }
        return std::nullopt;
      });
}

Outcome check_inner(Context& c) {
  c.params["maxValuation"] = c.cfg.degree;
  return over_trials(
      c, c.cfg.trials,
      [&] {
        Rat x;
        do x = c.rng.nonzero_rat(c.cfg.sample_bound);
        while (x == 1);
        const Rat q = c.rng.unit_interval(c.cfg.q_bound);
        return std::pair{std::pair{x, q}, "x,q=" + pair_str(x, q)};
      },
      [&](const std::pair<Rat, Rat>& xq) -> Outcome {
        const auto& [x, q] = xq;
        for (unsigned m = 0; m <= c.cfg.degree; ++m) {
          Rat closed = verify::inner_integral_closed(m, x, q);
          if (c.fault) closed = (1 - q * x) * (1 - pow(x, static_cast<int>(m))) / (1 - x);
          const Rat oracle = verify::inner_integral_shell_sum(m, x, q);
          if (closed != oracle) return named("valuation " + std::to_string(m), closed, oracle);
        }
        return std::nullopt;
      });
}

Outcome check_t21(Context& c) {
  c.params["degree"] = c.cfg.degree;
  return over_trials(
      c, c.cfg.trials,
      [&] {
        auto pt = c.rng.a3_point(c.cfg.sample_bound);
        const Rat q = c.rng.unit_interval(c.cfg.q_bound);
        return std::pair{std::pair{pt, q}, pt.str() + " q=" + to_string(q)};
      },
      [&](const std::pair<SatakePointA3, Rat>& s) {
        return verify::check_thm_2_1(s.first, s.second, c.cfg.degree, c.fault);
      });
}

Outcome check_bfg(Context& c) {
  // one-time calibration of which index carries the spin weight
  constexpr unsigned kCalDegree = 4, kCalPoints = 5;
  std::vector<SatakePointC2> cal;
  for (unsigned i = 0; i < kCalPoints; ++i) cal.push_back(c.rng.c2_point(c.cfg.sample_bound));
  auto passes = [&](verify::C2Dictionary dict) {
    return std::all_of(cal.begin(), cal.end(),
                       [&](const SatakePointC2& pt) { return !verify::check_bfg_identity(pt, kCalDegree, dict); });
  };
  const bool n_ok = passes(verify::C2Dictionary::SpinFromN);
  const bool m_ok = passes(verify::C2Dictionary::SpinFromM);
  c.params["calibration"] = {{"degree", kCalDegree},
                             {"points", kCalPoints},
                             {"spinFromN", n_ok},
                             {"spinFromM", m_ok}};
  const bool frozen_is_n = verify::kWeightDictionary == verify::C2Dictionary::SpinFromN;
  if (n_ok == m_ok || n_ok != frozen_is_n)
    return named("weight dictionary calibration (1 = SpinFromN alone passes)", n_ok && !m_ok ? 1 : 0, 1);

  c.params["degree"] = c.cfg.degree;
  return over_trials(
      c, c.cfg.trials,
      [&] {
        auto pt = c.rng.c2_point(c.cfg.sample_bound);
        return std::pair{pt, pt.str()};
      },
      [&](const SatakePointC2& pt) {
        return verify::check_bfg_identity(pt, c.cfg.degree, verify::kWeightDictionary, c.fault);
      });
}

Outcome check_p31(Context& c) {
  return over_trials(
      c, c.cfg.trials,
      [&] {
        const Rat a = c.rng.nonzero_rat(c.cfg.sample_bound), b = c.rng.nonzero_rat(c.cfg.sample_bound);
        return std::pair{std::pair{a, b}, "a,b=" + pair_str(a, b)};
      },
      [&](const std::pair<Rat, Rat>& ab) { return verify::check_prop_gsp4L(ab.first, ab.second, c.fault); });
}

Outcome check_inert(Context& c) {
  c.params["degree"] = c.cfg.degree;
  return over_trials(
      c, c.cfg.trials,
      [&] {
        const Rat a = c.rng.nonzero_rat(c.cfg.sample_bound), b = c.rng.nonzero_rat(c.cfg.sample_bound);
        const Rat q = c.rng.unit_interval(c.cfg.q_bound);
        return std::pair{std::tuple{a, b, q}, "a,b=" + pair_str(a, b) + " q=" + to_string(q)};
      },
      [&](const std::tuple<Rat, Rat, Rat>& s) {
        return verify::check_thm_3_2_inert(std::get<0>(s), std::get<1>(s), std::get<2>(s), c.cfg.degree, c.fault);
      });
}

Outcome check_split(Context& c) {
  c.params["degree"] = c.cfg.degree;
  json audit = json::array();
  for (const auto& row : verify::split_argument_audit())
    audit.push_back({{"factor", row.factor},
                     {"gl4", row.gl4_argument.str()},
                     {"specialized", row.specialized.str()},
                     {"gu22", row.gu22_argument.str()},
                     {"matches", row.matches}});
  c.params["argumentAudit"] = audit;
  return over_trials(
      c, c.cfg.trials,
      [&] {
        auto pt = c.rng.a3_point(c.cfg.sample_bound);
        const Rat q = c.rng.unit_interval(c.cfg.q_bound);
        return std::pair{std::pair{pt, q}, pt.str() + " q=" + to_string(q)};
      },
      [&](const std::pair<SatakePointA3, Rat>& s) {
        return verify::check_thm_3_2_split(s.first, Rat(1), s.second, c.cfg.degree, c.fault);
      });
}

Outcome decomposition_outcome(Context& c, const cosets::CosetDecomposition& d, std::size_t expected) {
  json& entry = c.params["fields"][d.group];
  entry = {{"cosets", d.cosets.size()},
           {"groupOrder", d.total},
           {"orderP", d.order_P},
           {"orderQ", d.order_Q}};
  json sizes = json::array();
  for (const auto& k : d.cosets) sizes.push_back(k.size);
  entry["cosetSizes"] = sizes;
  const std::string g = d.group + ": ";
  if (d.order_P != d.formula_P) return named(g + "|P|", Rat(d.order_P), Rat(d.formula_P));
  if (d.order_Q != d.formula_Q) return named(g + "|Q|", Rat(d.order_Q), Rat(d.formula_Q));
  if (d.cosets.size() != expected) return named(g + "number of double cosets", Rat(d.cosets.size()), Rat(expected));
  if (d.size_sum() != d.total) return named(g + "sum of double coset sizes", Rat(d.size_sum()), Rat(d.total));
  if (!d.listed_distinct()) {
    for (std::size_t i = 0; i < d.listed.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (d.listed[i].coset == d.listed[j].coset)
          return named(g + d.listed[i].label + " and " + d.listed[j].label + " share a double coset",
                       d.listed[i].coset, d.listed[j].coset);
    return named(g + "double cosets without a listed representative", Rat(d.cosets.size()), Rat(d.listed.size()));
  }
  if (!d.listing_sizes.empty()) {
    if (d.listed_order != d.total) return named(g + "listed group order", Rat(d.listed_order), Rat(d.total));
    for (std::size_t i = 0; i < d.cosets.size(); ++i)
      if (d.listing_sizes[i] != d.cosets[i].size)
        return named(g + "coset " + std::to_string(i) + " size by full listing", Rat(d.listing_sizes[i]),
                     Rat(d.cosets[i].size));
  }
  return std::nullopt;
}

Outcome check_gl4_cosets(Context& c) {
  for (unsigned p : {2u, 3u})
    if (auto d = decomposition_outcome(c, cosets::enumerate_gl4_double_cosets(p, c.fault), 4)) return d;
  return std::nullopt;
}

Outcome check_gu4_cosets(Context& c) {
  return decomposition_outcome(c, cosets::enumerate_gu4_double_cosets(2, c.fault), 2);
}

Outcome check_stabilizers(Context& c) {
  for (unsigned p : {2u, 3u}) {
    const auto& f = ff::shared_field(p, 1);
    for (int i : {1, 2}) {
      const std::string where = "gamma_" + std::to_string(i) + " over F_" + std::to_string(p);
      if (!cosets::check_stabilizer_unipotent(i, p, c.fault))
        return named(where + ": unipotent radical fixes the coset", 0, 1);
      // negative control: some generator of P must move the coset
      const auto gens = cosets::gl4_P_generators(f);
      const bool moved = std::any_of(gens.begin(), gens.end(),
                                     [&](const auto& x) { return !cosets::stabilizes(cosets::gamma(f, i), x); });
      if (!moved) return named(where + ": some element of P moves the coset", 0, 1);
    }
  }
  return std::nullopt;
}

Outcome check_lgroup(Context& c) {
  const Rep6Matrix a = a_matrix();
  const Rep6Matrix a_inv = a.inverse();
  auto draw_element = [&](bool twisted) {
    return LGroupElement{c.rng.nonzero_rat(5), c.rng.invertible_matrix(4, 3), twisted};
  };
  auto first_entry = [](const std::string& what, const RatMatrix& l, const RatMatrix& r) -> Outcome {
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = 0; j < l.size(); ++j)
        if (l(i, j) != r(i, j)) return named(what + " entry (" + std::to_string(i) + "," + std::to_string(j) + ")", l(i, j), r(i, j));
    return std::nullopt;
  };
  return over_trials(
      c, c.cfg.trials,
      [&] {
        std::array<LGroupElement, 2> xs{draw_element(c.rng.below(2) == 1), draw_element(c.rng.below(2) == 1)};
        std::string desc = "lambda=" + to_string(xs[0].lambda) + "," + to_string(xs[1].lambda) +
                           " twisted=" + std::to_string(xs[0].twisted) + std::to_string(xs[1].twisted);
        return std::pair{xs, desc};
      },
      [&](const std::array<LGroupElement, 2>& xs) -> Outcome {
        const auto& [x, y] = xs;
        const auto [l1, g1] = theta_action(x.lambda, x.g);
        const auto [l2, g2] = theta_action(l1, g1);
        if (l2 != x.lambda) return named("theta^2 on the GL1 factor", l2, x.lambda);
        if (auto d = first_entry("theta^2", g2, x.g)) return d;
        const Rep6Matrix lhs = wedge2_rep(c.fault ? x.lambda : l1, g1);
        if (auto d = first_entry("wedge2(theta x) = A^-1 wedge2(x) A", lhs, a_inv * wedge2_rep(x.lambda, x.g) * a))
          return d;
        if (auto d = first_entry("exterior square of a product", exterior_square(x * y),
                                 exterior_square(x) * exterior_square(y)))
          return d;
        if (auto d = first_entry("induced Std of a product", induced_standard(x * y),
                                 induced_standard(x) * induced_standard(y)))
          return d;
        return std::nullopt;
      });
}

struct CheckDef {
  CatalogEntry entry;
  CheckFn fn;
  bool uses_tables = false;
};

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs{
      {{"bfg-identity",
        "Sp4 character series sum V^n U^2m (..) K[m,n] = L(Std,U^2) L(Spin,V) (1-U^4); weight dictionary calibrated first",
        "degree = truncation, trials = points"},
       check_bfg},
      {{"char-oracles", "SL4 characters by tableaux against the bialternant; Sp4 weight multiplicities against the Weyl quotient",
        "weights up to min(degree,5), trials = points"},
       check_characters},
      {{"gl4-cosets", "Q\\GL4/P has four double cosets represented by (1243), 1, (123), (243)",
        "fields F_2 and F_3; degree and trials unused"},
       check_gl4_cosets},
      {{"gl4-stabilizers", "the stabilizer of Q gamma_i in P contains the unipotent radical of P_{3,1} (i=1), P_{1,3} (i=2)",
        "fields F_2 and F_3; degree and trials unused"},
       check_stabilizers},
      {{"gu4-cosets", "Q\\GU(2,2)/P is represented by 1 and nu_P nu_Q^-1",
        "F_4 over F_2; degree and trials unused"},
       check_gu4_cosets},
      {{"inner-integrals", "unipotent inner integral (1-|p|^S)(1-|p|^{(S-1)(m+1)})/(1-|p|^{S-1}) against the shell sum",
        "valuations 0..degree, trials = (x,q) pairs"},
       check_inner},
      {{"lemma-2-2", "sum A[l,m,n] Y^m (..)(..)(..) = (sum A[t,0,v] X^t Z^v)(sum A[0,u,0] Y^u)",
        "degree = truncation, trials = points"},
       check_lemma},
      {{"lgroup-structure", "theta is an involution intertwined by A on wedge^2; wedge^2 and induced Std are homomorphisms",
        "trials = pairs of L-group elements"},
       check_lgroup},
      {{"littlewood-closures", "A[t,0,0], A[0,u,0], A[t,0,v] series against L(Std), (1-Y^2)L(wedge2), (1-XZ)L(Std)L(wedge3)",
        "degree = truncation, trials = points"},
       check_closures},
      {{"lr-closed-form", "A[t,0,v] A[0,u,0] decomposition closed form against Littlewood-Richardson tableaux",
        "t,u,v <= min(degree,4)"},
       check_lr},
      {{"prop-3-1", "twisted wedge2 = Spin x L(omega,2s) and twisted Std x L(omega,2w)^-1 = GSp4 Std at 2w",
        "trials = (a,b) pairs"},
       check_p31},
      {{"thm-2-1", "unramified GL4 integral = L(Std)L(wedge2)L(wedge3)/(zeta(4w)zeta(4w-1)zeta(4s1+4s2-2))",
        "degree = truncation, trials = (point,q)"},
       check_t21, true},
      {{"thm-3-2-inert", "inert unramified GU(2,2) integral = L(Std)L(wedge2)/(zeta_F(4w)zeta_E(3s)L(eps,4w-1)zeta_F(6s-2))",
        "degree = truncation, trials = (a,b,q)"},
       check_inert, true},
      {{"thm-3-2-split", "split unramified GU(2,2) integral from the GL4 one along s1 = s2 = 3s/4, with argument audit",
        "degree = truncation, trials = (point,q)"},
       check_split, true},
  };
  return defs;
}

const CheckDef& find_def(const std::string& name) {
  for (const auto& d : registry())
    if (d.entry.name == name) return d;
  throw UsageError("unknown check '" + name + "' (see `rs-verify list`)");
}

json rat_json(const Rat& r) { return to_string(r); }

const char* status_str(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "?";
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& d : registry()) out.push_back(d.entry);
    return out;
  }();
  return entries;
}

std::vector<std::string> resolve_checks(const std::vector<std::string>& names) {
  if (names.empty()) throw UsageError("no checks selected");
  std::set<std::string> chosen;
  for (const auto& n : names) {
    if (n == "all") {
      for (const auto& e : catalog()) chosen.insert(e.name);
      continue;
    }
    find_def(n);
    chosen.insert(n);
  }
  return {chosen.begin(), chosen.end()};
}

CheckReport run_check(const std::string& name, const SuiteConfig& cfg) {
  const CheckDef& def = find_def(name);
  const std::uint64_t stream = cfg.seed ^ fnv1a64(name);
  Context c{cfg, Sampler(stream), cfg.faults.count(name) > 0 || cfg.faults.count("all") > 0};
  CheckReport r;
  r.name = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (cfg.faults.count(std::string(kTableFault)) && def.uses_tables) {
      // a deliberately wrong expectation: |p|^{4w} is q XZ, not XZ
      gl4_table().self_check({{AffineForm::param("w", 4), QMonomial{0, {1, 0, 1}}}});
    }
    r.discrepancy = def.fn(c);
    r.status = r.discrepancy ? Status::Fail : Status::Pass;
  } catch (const ConfigurationError& e) {
    r.status = Status::Error;
    r.error = std::string("configuration: ") + e.what();
  } catch (const std::exception& e) {
    r.status = Status::Fail;
    r.error = e.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  c.params["trials"] = cfg.trials;
  c.params["streamSeed"] = stream;
  c.params["sampleBound"] = cfg.sample_bound;
  c.params["qBound"] = cfg.q_bound;
  if (c.fault) c.params["injectedFault"] = true;
  c.params["points"] = c.points;
  r.params = std::move(c.params);
  return r;
}

unsigned thread_count(unsigned requested, std::size_t jobs) {
  unsigned n = requested;
  if (n == 0) {
    if (const char* env = std::getenv("RS_VERIFY_THREADS")) {
      char* end = nullptr;
      const unsigned long v = std::strtoul(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) n = static_cast<unsigned>(v);
    }
  }
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(n, jobs)));
}

std::vector<CheckReport> run_checks(const SuiteConfig& cfg) {
  if (cfg.trials < 1) throw UsageError("trials must be at least 1");
  if (cfg.sample_bound < 1) throw UsageError("sample bound must be at least 1");
  if (cfg.q_bound < 2) throw UsageError("q bound must be at least 2");
  const std::vector<std::string> names = resolve_checks(cfg.checks);
  for (const auto& f : cfg.faults)
    if (f != "all" && f != kTableFault) find_def(f);
  std::vector<CheckReport> reports(names.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < names.size();) reports[i] = run_check(names[i], cfg);
  };
  const unsigned n = thread_count(cfg.threads, names.size());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return reports;  // names are sorted
}

json to_json(const SuiteConfig& cfg, const std::vector<CheckReport>& reports) {
  json checks = json::array();
  for (const auto& r : reports) {
    json j = {{"name", r.name}, {"params", r.params}, {"status", status_str(r.status)}, {"elapsedMs", r.elapsed_ms}};
    if (r.discrepancy)
      j["discrepancy"] = {{"location", r.discrepancy->location},
                          {"lhs", rat_json(r.discrepancy->lhs)},
                          {"rhs", rat_json(r.discrepancy->rhs)}};
    if (!r.error.empty()) j["error"] = r.error;
    checks.push_back(std::move(j));
  }
  return {{"version", kVersion}, {"seed", cfg.seed}, {"degree", cfg.degree}, {"checks", checks}};
}

std::string to_text(const SuiteConfig& cfg, const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  os << "rs-verify " << kVersion << "  seed=" << cfg.seed << " degree=" << cfg.degree << " trials=" << cfg.trials
     << "\n";
  unsigned pass = 0;
  for (const auto& r : reports) {
    os << (r.status == Status::Pass ? "PASS " : r.status == Status::Fail ? "FAIL " : "ERROR") << "  " << r.name;
    os << std::string(r.name.size() < 22 ? 22 - r.name.size() : 1, ' ');
    os << static_cast<long>(r.elapsed_ms + 0.5) << " ms";
    if (r.discrepancy)
      os << "\n       " << r.discrepancy->location << ": lhs=" << to_string(r.discrepancy->lhs)
         << " rhs=" << to_string(r.discrepancy->rhs);
    if (!r.error.empty()) os << "\n       " << r.error;
    os << "\n";
    pass += r.status == Status::Pass;
  }
  os << pass << "/" << reports.size() << " checks passed\n";
  return os.str();
}

int exit_code(const std::vector<CheckReport>& reports) {
  int code = kAllPass;
  for (const auto& r : reports) {
    if (r.status == Status::Error) return kInconsistent;
    if (r.status == Status::Fail) code = kSomeFail;
  }
  return code;
}

int run_suite(const SuiteConfig& cfg, std::ostream& err) {
  std::vector<CheckReport> reports;
  try {
    reports = run_checks(cfg);
  } catch (const UsageError& e) {
    err << "rs-verify: " << e.what() << "\n";
    return kUsage;
  }
  const std::string body = cfg.format == Format::Json ? to_json(cfg, reports).dump(2) + "\n" : to_text(cfg, reports);
  if (cfg.output.empty() || cfg.output == "-") {
    std::cout << body << std::flush;
  } else {
    std::ofstream out(cfg.output);
    if (!out) {
      err << "rs-verify: cannot write " << cfg.output << "\n";
      return kUsage;
    }
    out << body;
  }
  return exit_code(reports);
}

std::string list_checks() {
  std::ostringstream os;
  for (const auto& e : catalog()) os << e.name << "\n    " << e.anchor << "\n    [" << e.uses << "]\n";
  return os.str();
}

}  // namespace rsv::suite
