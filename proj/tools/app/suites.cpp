#include "suites.hpp"

#include <functional>
#include <map>

#include "dillab/bounds.hpp"
#include "dillab/charpoly.hpp"
#include "dillab/error.hpp"
#include "dillab/families.hpp"
#include "dillab/intmatrix.hpp"
#include "dillab/intpoly.hpp"
#include "dillab/lefschetz.hpp"
#include "dillab/log_enclosure.hpp"
#include "dillab/parallel.hpp"
#include "dillab/transgraph.hpp"
#include "generators.hpp"

namespace dillab::app {

namespace {

struct CaseOutcome {
  bool ok = false;
  std::string failure;  // first failed check
  Json data;
};

SuiteResult finish(const std::string& name, const SuiteConfig& cfg, std::vector<CaseOutcome> outcomes,
                   Json summary = Json::object()) {
  SuiteResult r;
  r.name = name;
  r.cases = static_cast<unsigned>(outcomes.size());
  Json results = Json::array();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    auto& o = outcomes[i];
    if (!o.ok) {
      ++r.failures;
      if (r.detail.empty()) r.detail = "case " + std::to_string(i) + ": " + o.failure;
    }
    Json entry;
    entry["case"] = i;
    entry["ok"] = o.ok;
    if (!o.ok) entry["failure"] = o.failure;
    for (auto& [k, v] : o.data.items()) entry[k] = std::move(v);
    results.push_back(std::move(entry));
  }
  r.passed = r.failures == 0 && r.cases > 0;
  if (r.cases == 0) r.detail = "no cases ran";
  r.report["suite"] = name;
  r.report["seed"] = cfg.seed;
  r.report["cases"] = r.cases;
  r.report["failures"] = r.failures;
  r.report["passed"] = r.passed;
  r.report["summary"] = std::move(summary);
  r.report["results"] = std::move(results);
  return r;
}

template <class Fn>
std::vector<CaseOutcome> run_cases(std::size_t count, unsigned jobs, Fn&& fn) {
  std::vector<CaseOutcome> out(count);
  parallel_for(count, jobs, [&](std::size_t i) {
    try {
      out[i] = fn(i);
    } catch (const std::exception& e) {
      out[i].ok = false;
      out[i].failure = std::string("exception: ") + e.what();
    }
  });
  return out;
}

std::string dec(const Rational& q, Rounding dir = Rounding::Nearest) { return to_decimal_sig(q, 12, dir); }

// ---------------------------------------------------------------------------

SuiteResult suite_t11_root(const SuiteConfig& cfg) {
  auto outcomes = run_cases(1, 1, [](std::size_t) {
    CaseOutcome o;
    const IntPoly p = build_T(1, 1);
    const RootEnclosure r = largest_root(p, 4);
    // (3 + sqrt 5) / 2 is the root of q = x^2 - 3x + 1 above 3/2, where q increases.
    const auto q = [](const Rational& x) -> Rational { return x * x - 3 * x + 1; };
    const bool contains = r.lo > Rational(3, 2) && q(r.lo) < 0 && q(r.hi) > 0;
    const bool narrow = r.hi - r.lo <= Rational(1, 1000000000);
    o.ok = contains && narrow && r.certified_largest();
    if (!contains) o.failure = "enclosure misses (3 + sqrt 5) / 2";
    else if (!narrow) o.failure = "enclosure wider than 1e-9";
    else if (!r.certified_largest()) o.failure = "root not certified largest";
    o.data["poly"] = p.to_string();
    o.data["root"] = root_json(r);
    o.data["width"] = dec(r.hi - r.lo, Rounding::Up);
    return o;
  });
  return finish("t11-root", cfg, std::move(outcomes));
}

SuiteResult suite_tm_root_bound(const SuiteConfig& cfg) {
  const unsigned count = cfg.cases.value_or(196);
  auto outcomes = run_cases(count, cfg.jobs, [](std::size_t i) {
    CaseOutcome o;
    const unsigned long m = 5 + i;
    const LrootReport r = verify_lroot(m);
    o.ok = r.all();
    if (!r.value_at_one) o.failure = "T_m(1) != -4";
    else if (!r.bound_holds) o.failure = "hi(root) >= lo(m^(3/m)) or root not certified largest";
    else if (!r.ineq1) o.failure = "inequality (1) fails";
    else if (!r.ineq2) o.failure = "inequality (2) fails";
    else if (!r.ineq3) o.failure = "inequality (3) fails";
    else if (!r.chain) o.failure = "closing chain fails";
    o.data["m"] = m;
    o.data["root_hi"] = dec(r.root.hi, Rounding::Up);
    o.data["m_root_lo"] = dec(r.m_root.lo, Rounding::Down);
    return o;
  });
  return finish("tm-root-bound", cfg, std::move(outcomes));
}

SuiteResult suite_torus(const SuiteConfig& cfg) {
  const unsigned count = cfg.cases.value_or(196);
  auto outcomes = run_cases(count, cfg.jobs, [](std::size_t i) {
    CaseOutcome o;
    const unsigned long n = 5 + i;
    const TorusMatrixSpec spec = torus_matrix(n);
    const TorusReport rep = verify_torus_bounds(spec);
    const PFEnclosure mu = pf_enclosure(spec.matrix);
    const Rational nq{Integer(n)};
    const Interval log_lambda = log_interval(mu.interval()) / nq;
    const Interval root_mu = nth_root_enclosure(mu.hi, n, 64);
    const Interval root_11 = nth_root_enclosure(11, n, 64);
    const bool mu_le_9 = mu.hi <= 9;
    const bool log_ok = log_lambda.certainly_leq(rep.log_dil_bound);
    const bool root_ok = root_mu.hi <= root_11.lo;
    o.ok = mu_le_9 && log_ok && root_ok;
    if (!mu_le_9) o.failure = "hi(mu) > 9";
    else if (!log_ok) o.failure = "log(mu)/n not below log(11)/n";
    else if (!root_ok) o.failure = "mu^(1/n) not below 11^(1/n)";
    o.data["n"] = n;
    o.data["max_col_sum"] = rep.max_col_sum.get_str();
    o.data["max_row_sum"] = rep.max_row_sum.get_str();
    o.data["mu_hi"] = dec(mu.hi, Rounding::Up);
    o.data["log_lambda_hi"] = dec(log_lambda.hi, Rounding::Up);
    o.data["log11_over_n_lo"] = dec(rep.log_dil_bound.lo, Rounding::Down);
    return o;
  });
  return finish("torus", cfg, std::move(outcomes));
}

SuiteResult suite_diagonal_power(const SuiteConfig& cfg) {
  const unsigned count = cfg.cases.value_or(200);
  auto outcomes = run_cases(count, cfg.jobs, [&](std::size_t i) {
    CaseOutcome o;
    auto rng = case_rng(cfg.seed, "diagonal-power", i);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
    const IntMatrix m = random_irreducible_with_diagonal(rng, k, 4);
    const DiagonalBoundReport r = verify_diagonal_bound(m);
    o.ok = r.positive_power && r.mu_bound_holds;
    if (!r.positive_power) o.failure = "M^(2k) has a zero entry";
    else if (!r.mu_bound_holds) o.failure = "lo(mu)^(2k) < k";
    o.data["k"] = k;
    o.data["matrix"] = matrix_json(m)["rows"];
    return o;
  });
  return finish("diagonal-power", cfg, std::move(outcomes));
}

SuiteResult suite_path_growth(const SuiteConfig& cfg) {
  const unsigned count = cfg.cases.value_or(50);
  const Rational tol(1, 20);
  auto outcomes = run_cases(count, cfg.jobs, [&](std::size_t i) {
    CaseOutcome o;
    auto rng = case_rng(cfg.seed, "path-growth", i);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
    const TransGraph g = TransGraph::from_matrix(random_irreducible(rng, k, 1));
    Rational worst = 0;
    o.ok = true;
    for (std::size_t v = 0; v < k; ++v) {
      const LimitCheckReport r = dilatation_limit_check(g, v, 200, tol);
      worst = std::max(worst, r.last_gap);
      if (!r.converged && o.ok) {
        o.ok = false;
        o.failure = "vertex " + std::to_string(v + 1) + " gap " + dec(r.last_gap, Rounding::Up) + " > 0.05";
      }
    }
    o.data["k"] = k;
    o.data["worst_gap"] = dec(worst, Rounding::Up);
    return o;
  });
  return finish("path-growth", cfg, std::move(outcomes));
}

SuiteResult suite_subdivision(const SuiteConfig& cfg) {
  const unsigned count = cfg.cases.value_or(100);
  struct Extra {
    bool shift_equal = true;
    bool shift_le = true;
    bool ordering = true;
    int exact = 2;  // 2 = not run
  };
  std::vector<Extra> extras(count);
  auto outcomes = run_cases(count, cfg.jobs, [&](std::size_t i) {
    CaseOutcome o;
    auto rng = case_rng(cfg.seed, "subdivision", i);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(3, 8)(rng);
    const SubdivisionInstance inst = random_subdivision_instance(rng, k, 3);
    const TransGraph g1 = subdivide_out_edge(inst.graph, inst.vertex);
    Extra& x = extras[i];

    const auto p = path_counts(inst.graph, inst.vertex, 20);
    const auto p1 = path_counts(g1, inst.vertex, 21);
    Json mismatch;
    for (unsigned long d = 0; d <= 20; ++d) {
      if (p1[d + 1] != p[d]) {
        if (x.shift_equal) mismatch = {{"d", d}, {"subdivided", p1[d + 1].get_str()}, {"original", p[d].get_str()}};
        x.shift_equal = false;
      }
      if (p1[d + 1] > p[d]) x.shift_le = false;
    }

    const PFEnclosure mu = pf_enclosure(inst.graph.to_matrix());
    const PFEnclosure mu1 = pf_enclosure(g1.to_matrix());
    x.ordering = mu1.hi <= mu.hi && mu1.lo <= mu.hi;
    if (k <= 6) x.exact = compare_largest_roots(charpoly(g1.to_matrix()), charpoly(inst.graph.to_matrix()));
    const bool exact_ok = x.exact != 1;

    o.ok = x.shift_equal && x.ordering && exact_ok;
    if (!x.shift_equal) {
      o.failure = "path-shift equality fails at d = " + mismatch["d"].dump() + " (" +
                  mismatch["subdivided"].get<std::string>() + " vs " + mismatch["original"].get<std::string>() + ")";
    } else if (!x.ordering) {
      o.failure = "hi(mu(G1)) > hi(mu(G))";
    } else if (!exact_ok) {
      o.failure = "characteristic polynomials give mu(G1) > mu(G)";
    }
    o.data["k"] = k;
    o.data["vertex"] = inst.vertex + 1;
    o.data["shift_equal"] = x.shift_equal;
    o.data["shift_le"] = x.shift_le;
    if (!x.shift_equal) o.data["first_mismatch"] = mismatch;
    o.data["mu_hi"] = dec(mu.hi, Rounding::Up);
    o.data["mu1_hi"] = dec(mu1.hi, Rounding::Up);
    if (k <= 6) o.data["exact_compare"] = x.exact;
    return o;
  });
  unsigned eq = 0, le = 0, ord = 0, exact_run = 0, exact_ok = 0;
  for (const auto& x : extras) {
    eq += x.shift_equal;
    le += x.shift_le;
    ord += x.ordering;
    if (x.exact != 2) {
      ++exact_run;
      exact_ok += x.exact != 1;
    }
  }
  Json summary;
  summary["shift_equal"] = eq;
  summary["shift_le"] = le;
  summary["interval_ordering"] = ord;
  summary["exact_checked"] = exact_run;
  summary["exact_ok"] = exact_ok;
  return finish("subdivision", cfg, std::move(outcomes), std::move(summary));
}

SuiteResult suite_multitwist_trace(const SuiteConfig& cfg) {
  const unsigned count = cfg.cases.value_or(200);
  auto outcomes = run_cases(count, cfg.jobs, [&](std::size_t i) {
    CaseOutcome o;
    auto rng = case_rng(cfg.seed, "multitwist-trace", i);
    const TwistSystem sys = random_twist_system(rng, 6);
    const MultitwistResult r = multitwist(sys.twists, sys.g);
    bool factors_symplectic = true;
    for (const auto& t : sys.twists) factors_symplectic = factors_symplectic && transvection(t.gamma, t.power).is_symplectic();
    std::vector<Twist> reversed(sys.twists.rbegin(), sys.twists.rend());
    const bool commute = multitwist(reversed, sys.g).action == r.action;
    const Integer two_g(2 * sys.g);
    const bool trace_ok = r.action.trace() == two_g;
    const bool l_ok = r.lefschetz == 2 - two_g;
    const bool product_symplectic = r.action.is_symplectic();
    o.ok = trace_ok && l_ok && factors_symplectic && product_symplectic && commute;
    if (!trace_ok) o.failure = "trace != 2g";
    else if (!l_ok) o.failure = "L != 2 - 2g";
    else if (!factors_symplectic) o.failure = "a transvection is not symplectic";
    else if (!product_symplectic) o.failure = "product is not symplectic";
    else if (!commute) o.failure = "reversed product differs";
    o.data["g"] = sys.g;
    o.data["twists"] = sys.twists.size();
    o.data["lefschetz"] = r.lefschetz.get_str();
    return o;
  });
  return finish("multitwist-trace", cfg, std::move(outcomes));
}

SuiteResult suite_local_index(const SuiteConfig& cfg) {
  const unsigned random_count = cfg.cases.value_or(50);
  const std::vector<std::pair<PlaneModel, long>> fixed = {
      {LinearModel{-2, 0, 0, -0.5}, 1},
      {RotationModel{1, 3}, 1},
      {LinearModel{2, 0, 0, 0.5}, -1},
  };
  const std::vector<std::string> fixed_names = {"flip-hyperbolic", "rotation-1/3", "hyperbolic-fixed-separatrices"};
  const double radii[] = {0.5, 1.0, 2.0};
  auto outcomes = run_cases(fixed.size() + random_count, cfg.jobs, [&](std::size_t i) {
    CaseOutcome o;
    PlaneModel model;
    long expected = 0;
    if (i < fixed.size()) {
      model = fixed[i].first;
      expected = fixed[i].second;
      o.data["model"] = fixed_names[i];
    } else {
      auto rng = case_rng(cfg.seed, "local-index", i);
      std::uniform_real_distribution<double> entry(-3.0, 3.0);
      LinearModel lin;
      do {
        lin = {entry(rng), entry(rng), entry(rng), entry(rng)};
      } while (std::abs((lin.a - 1) * (lin.d - 1) - lin.b * lin.c) <= 1e-3);
      model = lin;
      expected = linear_index_oracle(lin);
      o.data["model"] = "random-linear";
    }
    o.ok = true;
    Json got = Json::array();
    for (double r : radii) {
      IndexOptions opts;
      opts.radius = r;
      const long idx = local_index(model, opts);
      got.push_back(idx);
      if (idx != expected && o.ok) {
        o.ok = false;
        o.failure = "index " + std::to_string(idx) + " at radius " + std::to_string(r) + ", expected " +
                    std::to_string(expected);
      }
    }
    o.data["expected"] = expected;
    o.data["indices"] = got;
    return o;
  });
  return finish("local-index", cfg, std::move(outcomes));
}

SuiteResult suite_theta(const SuiteConfig& cfg) {
  auto outcomes = run_cases(2, 1, [](std::size_t i) {
    CaseOutcome o;
    if (i == 0) {
      const unsigned long brute = count_sl2_z3();
      o.ok = brute == 24 && theta(1) == 24;
      if (!o.ok) o.failure = "theta(1) or enumeration differs from 24";
      o.data["g"] = 1;
      o.data["enumerated"] = brute;
      o.data["formula"] = theta(1).get_str();
    } else {
      o.ok = theta(2) == 51840;
      if (!o.ok) o.failure = "theta(2) != 51840";
      o.data["g"] = 2;
      o.data["formula"] = theta(2).get_str();
    }
    return o;
  });
  return finish("theta", cfg, std::move(outcomes));
}

SuiteResult suite_sandwich(const SuiteConfig& cfg) {
  const unsigned points = cfg.cases.value_or(60);
  const auto ns = log_uniform_range(31, 10000, points);
  const SandwichTable table = sandwich_table(2, ns, cfg.jobs);
  const Rational kappa = table.kappa->kappa;
  std::vector<CaseOutcome> outcomes(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const BoundRow& row = table.rows[i];
    CaseOutcome& o = outcomes[i];
    const Rational nq{Integer(row.n)};
    const bool finite = row.upper.has_value();
    const bool ratio_ok = finite && row.upper->hi * nq / log_enclosure(nq).lo <= kappa;
    o.ok = row.lower_positive && finite && row.lower_below_upper && ratio_ok && row.lower_sandwich;
    if (!row.lower_positive) o.failure = "lower bound not positive";
    else if (!finite) o.failure = "no upper bound";
    else if (!row.lower_below_upper) o.failure = "lower not below upper";
    else if (!ratio_ok) o.failure = "upper * n / log n exceeds kappa";
    else if (!row.lower_sandwich) o.failure = "lower below log n / (omega n)";
    o.data["n"] = row.n;
    o.data["lower_lo"] = dec(row.lower.lo, Rounding::Down);
    if (finite) o.data["upper_hi"] = dec(row.upper->hi, Rounding::Up);
  }
  Json summary;
  summary["points"] = ns.size();
  summary["kappa"] = rational_json(kappa, Rounding::Up);
  summary["kappa_argmax_n"] = table.kappa->argmax_n;
  summary["kappa_closed_m"] = dec(table.kappa->kappa_closed_m, Rounding::Up);
  summary["kappa_closed_x"] = dec(table.kappa->kappa_closed_x, Rounding::Up);
  summary["omega_hi"] = dec(table.omega.hi, Rounding::Up);
  return finish("sandwich", cfg, std::move(outcomes), std::move(summary));
}

using SuiteFn = std::function<SuiteResult(const SuiteConfig&)>;

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r = {
      {"t11-root", suite_t11_root},       {"tm-root-bound", suite_tm_root_bound},     {"torus", suite_torus},
      {"diagonal-power", suite_diagonal_power},           {"path-growth", suite_path_growth},     {"subdivision", suite_subdivision},
      {"multitwist-trace", suite_multitwist_trace},           {"local-index", suite_local_index}, {"theta", suite_theta},
      {"sandwich", suite_sandwich},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"t11-root", "tm-root-bound", "torus",       "diagonal-power", "path-growth",
                                                 "subdivision", "multitwist-trace", "local-index", "theta", "sandwich"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& config) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw Error(Errc::InvalidArgument, "unknown suite '" + name + "'");
  try {
    return it->second(config);
  } catch (const std::exception& e) {
    SuiteResult r;
    r.name = name;
    r.detail = std::string("suite aborted: ") + e.what();
    r.report = {{"suite", name}, {"seed", config.seed}, {"passed", false}, {"error", e.what()}};
    return r;
  }
}

VerifyReport run_suites(const std::vector<std::string>& names, const SuiteConfig& config) {
  VerifyReport v;
  v.passed = true;
  Json suites = Json::array();
  for (const auto& name : names) {
    SuiteResult r = run_suite(name, config);
    v.passed = v.passed && r.passed;
    suites.push_back(r.report);
    v.suites.push_back(std::move(r));
  }
  v.json["seed"] = config.seed;
  v.json["passed"] = v.passed;
  v.json["suites"] = std::move(suites);
  return v;
}

}  // namespace dillab::app
