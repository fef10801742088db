#include "cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "dillab/bounds.hpp"
#include "dillab/error.hpp"
#include "dillab/families.hpp"
#include "dillab/intmatrix.hpp"
#include "dillab/intpoly.hpp"
#include "dillab/lefschetz.hpp"
#include "dillab/transgraph.hpp"
#include "io.hpp"
#include "suites.hpp"

namespace dillab::app {

namespace {

constexpr int kOk = 0;
constexpr int kAssertion = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

unsigned default_jobs() {
  if (const char* env = std::getenv("DILLAB_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

/// Writes to a file atomically or to `out` when the path is empty or "-".
void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    write_atomic(path, content);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::size_t vertex_index(long one_based, std::size_t count) {
  if (one_based < 1 || static_cast<std::size_t>(one_based) > count) {
    throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(one_based) + " outside 1.." + std::to_string(count));
  }
  return static_cast<std::size_t>(one_based - 1);
}

std::pair<unsigned long, unsigned long> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const unsigned long v = std::stoul(text);
      return {v, v};
    }
    const unsigned long lo = std::stoul(text.substr(0, colon));
    const unsigned long hi = std::stoul(text.substr(colon + 1));
    if (hi < lo) throw UsageError("range '" + text + "' is empty");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("bad range '" + text + "', expected LO:HI");
  }
}

// ---------------------------------------------------------------------------

struct PfArgs {
  std::string matrix;
  std::string rel_width = "1e-9";
};

int cmd_pf(const PfArgs& a, std::ostream& out) {
  const IntMatrix m = parse_matrix(read_file(a.matrix));
  Json j;
  j["k"] = m.dim();
  j["irreducible"] = is_irreducible(m);
  j["positive"] = is_positive(m);
  if (is_irreducible(m)) {
    PFOptions opts;
    opts.rel_width = parse_rational(a.rel_width);
    j["enclosure"] = enclosure_json(pf_enclosure(m, opts));
  } else {
    j["enclosure"] = nullptr;
  }
  out << dump(j);
  return kOk;
}

struct PathsArgs {
  std::string matrix;
  long vertex = 1;
  unsigned long d = 10;
  bool limit = false;
  std::string tol = "0.05";
};

int cmd_paths(const PathsArgs& a, std::ostream& out) {
  const TransGraph g = TransGraph::from_matrix(parse_matrix(read_file(a.matrix)));
  const std::size_t i = vertex_index(a.vertex, g.vertex_count());
  Json j;
  j["vertex"] = a.vertex;
  j["d"] = a.d;
  Json counts = Json::array();
  for (const auto& c : path_counts(g, i, a.d)) counts.push_back(c.get_str());
  j["paths"] = counts;
  int status = kOk;
  if (a.limit) {
    const LimitCheckReport r = dilatation_limit_check(g, i, a.d, parse_rational(a.tol));
    j["limit_check"] = {{"converged", r.converged},
                        {"gap", rational_json(r.last_gap, Rounding::Up)},
                        {"root", interval_json(r.root)},
                        {"mu", interval_json(r.mu)}};
    if (!r.converged) status = kAssertion;
  }
  out << dump(j);
  return status;
}

struct SubdivideArgs {
  std::string matrix;
  long vertex = 1;
  std::string emit;
};

int cmd_subdivide(const SubdivideArgs& a, std::ostream& out) {
  const TransGraph g = TransGraph::from_matrix(parse_matrix(read_file(a.matrix)));
  const std::size_t i = vertex_index(a.vertex, g.vertex_count());
  const TransGraph g1 = subdivide_out_edge(g, i);
  const IntMatrix m = g.to_matrix();
  const IntMatrix m1 = g1.to_matrix();
  Json j;
  j["vertex"] = a.vertex;
  j["new_vertex"] = g1.vertex_count();
  Json eligible = Json::array();
  for (std::size_t v : subdividable_vertices(g)) eligible.push_back(v + 1);
  j["eligible_vertices"] = eligible;
  j["matrix"] = matrix_json(m1);
  if (is_irreducible(m) && is_irreducible(m1)) {
    const PFEnclosure mu = pf_enclosure(m);
    const PFEnclosure mu1 = pf_enclosure(m1);
    j["mu"] = enclosure_json(mu);
    j["mu_subdivided"] = enclosure_json(mu1);
    j["ordering_holds"] = mu1.hi <= mu.hi;
  }
  if (!a.emit.empty()) write_atomic(a.emit, dump(matrix_json(m1)));
  out << dump(j);
  return kOk;
}

struct HkRootArgs {
  std::optional<unsigned long> s, t, m;
  std::string rel_width = "1e-10";
  std::string poly_file;
};

int cmd_hk_root(const HkRootArgs& a, std::ostream& out) {
  const int given = (a.m ? 1 : 0) + ((a.s || a.t) ? 1 : 0) + (a.poly_file.empty() ? 0 : 1);
  if (given != 1) throw UsageError("give exactly one of --m, --s/--t or --poly");
  if ((a.s || a.t) && !(a.s && a.t)) throw UsageError("--s and --t go together");
  RootOptions opts;
  opts.rel_width = parse_rational(a.rel_width);
  Json j;
  int status = kOk;
  IntPoly p;
  Rational search_hi;
  if (a.m) {
    p = build_Tm(*a.m);
    j["m"] = *a.m;
  } else if (a.s) {
    p = build_T(*a.s, *a.t);
    j["s"] = *a.s;
    j["t"] = *a.t;
  } else {
    try {
      p = poly_from_json(Json::parse(read_file(a.poly_file)));
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::ParseError, std::string("invalid polynomial JSON: ") + e.what());
    }
  }
  // Cauchy bound: every root is below 1 + max |c_i / c_d|.
  Rational cauchy = 0;
  for (const auto& [e, c] : p.terms()) {
    if (e != p.degree()) cauchy = std::max(cauchy, Rational(Rational(abs(c)) / Rational(abs(p.leading_coefficient()))));
  }
  search_hi = 2 + cauchy;
  j["poly"] = poly_json(p);
  j["poly_text"] = p.to_string();
  const RootEnclosure r = largest_root(p, search_hi, opts);
  j["root"] = root_json(r);
  if (!r.certified_largest()) status = kAssertion;
  if (a.m && *a.m >= 5) {
    const LrootReport rep = verify_lroot(*a.m);
    j["m_root"] = interval_json(rep.m_root);
    j["below_m_root"] = rep.bound_holds;
    j["inequalities"] = {{"ineq1", rep.ineq1}, {"ineq2", rep.ineq2}, {"ineq3", rep.ineq3}, {"chain", rep.chain}};
    j["value_at_one_is_minus_4"] = rep.value_at_one;
    if (!rep.all()) status = kAssertion;
  }
  out << dump(j);
  return status;
}

struct TorusArgs {
  unsigned long n = 5;
  std::string emit;
  std::string format = "json";
};

int cmd_torus(const TorusArgs& a, std::ostream& out) {
  const TorusMatrixSpec spec = torus_matrix(a.n);
  const std::string body = a.format == "text" ? matrix_text(spec.matrix) : dump(matrix_json(spec.matrix));
  if (!a.emit.empty()) {
    write_atomic(a.emit, body);
  }
  Json j;
  j["n"] = a.n;
  try {
    const TorusReport r = verify_torus_bounds(spec);
    j["max_col_sum"] = r.max_col_sum.get_str();
    j["max_row_sum"] = r.max_row_sum.get_str();
    j["max_col_index"] = r.max_col_index + 1;
    j["max_row_index"] = r.max_row_index + 1;
    j["irreducible"] = r.irreducible;
    j["log_dil_bound"] = interval_json(r.log_dil_bound);
    j["pf"] = enclosure_json(pf_enclosure(spec.matrix));
  } catch (const Error& e) {
    if (e.code() != Errc::ValidationFailed) throw;
    j["validation_error"] = e.what();
    out << dump(j);
    return kAssertion;
  }
  if (a.emit.empty()) {
    out << body;
  } else {
    out << dump(j);
  }
  return kOk;
}

struct CoverArgs {
  unsigned long g = 2;
  unsigned long n = 31;
  std::string csv;
};

int cmd_cover(const CoverArgs& a, std::ostream& out) {
  const CoverBound b = cover_upper_bound(a.g, a.n);
  Json j;
  j["g"] = a.g;
  j["n"] = a.n;
  j["m"] = b.spec.m;
  j["c"] = b.spec.c;
  j["root"] = root_json(b.bound.root);
  j["log_root"] = interval_json(b.bound.log_root);
  j["closed_form_m"] = interval_json(b.bound.closed_form);
  j["closed_form_n"] = interval_json(b.closed_form_n);
  j["consistent"] = b.consistent;
  if (!a.csv.empty()) {
    std::ostringstream row;
    row << a.g << ',' << a.n << ',' << b.spec.m << ',' << b.spec.c << ','
        << to_decimal_sig(b.certified_hi(), kDecimalDigits, Rounding::Up) << ','
        << to_decimal_sig(b.closed_form_n.hi, kDecimalDigits, Rounding::Up) << '\n';
    append_csv_atomic(a.csv, "g,n,m,c,certified_log_root_hi,closed_form_bound", row.str());
  }
  out << dump(j);
  return b.consistent ? kOk : kAssertion;
}

struct BoundsArgs {
  unsigned long g = 2;
  std::string n = "31:100";
  std::string format = "csv";
  std::string out;
  unsigned jobs = 1;
};

int cmd_bounds_table(const BoundsArgs& a, std::ostream& out) {
  const auto [lo, hi] = parse_range(a.n);
  std::vector<unsigned long> ns;
  for (unsigned long n = lo; n <= hi; ++n) ns.push_back(n);
  const SandwichTable t = sandwich_table(a.g, ns, a.jobs);
  std::string body;
  if (a.format == "csv") {
    body = "g,n,lower_lo,upper_hi,lower_source,upper_source\n";
    for (const auto& r : t.rows) {
      body += std::to_string(r.g) + ',' + std::to_string(r.n) + ',' +
              to_decimal_sig(r.lower.lo, kDecimalDigits, Rounding::Down) + ',' +
              (r.upper ? to_decimal_sig(r.upper->hi, kDecimalDigits, Rounding::Up) : std::string()) + ',' +
              r.lower_source + ',' + r.upper_source + '\n';
    }
  } else {
    Json j;
    j["g"] = t.g;
    j["omega"] = interval_json(t.omega);
    if (t.kappa) {
      j["kappa"] = rational_json(t.kappa->kappa, Rounding::Up);
      j["kappa_argmax_n"] = t.kappa->argmax_n;
      j["kappa_small_n_patch"] = "symbolic";
    }
    Json rows = Json::array();
    for (const auto& r : t.rows) {
      Json row;
      row["g"] = r.g;
      row["n"] = r.n;
      row["lower"] = interval_json(r.lower);
      row["upper"] = r.upper ? interval_json(*r.upper) : Json(nullptr);
      row["lower_source"] = r.lower_source;
      row["upper_source"] = r.upper_source;
      row["ok"] = r.ok();
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["passed"] = t.ok();
    body = dump(j);
  }
  emit(a.out, body, out);
  return t.ok() ? kOk : kAssertion;
}

struct RefsArgs {
  long g = 2;
  long n = 0;
};

int cmd_bounds_refs(const RefsArgs& a, std::ostream& out) {
  const ReferenceBounds r = penner_hk_reference_bounds(a.g, a.n);
  Json j;
  j["g"] = r.g;
  j["n"] = r.n;
  Json bounds = Json::array();
  for (const auto& b : r.bounds) {
    bounds.push_back({{"name", b.name}, {"kind", b.upper ? "upper" : "lower"}, {"value", interval_json(b.value)}});
  }
  Json omitted = Json::array();
  for (const auto& o : r.omitted) omitted.push_back({{"name", o.name}, {"reason", o.reason}});
  j["bounds"] = bounds;
  j["omitted"] = omitted;
  out << dump(j);
  return kOk;
}

struct LefschetzArgs {
  unsigned long g = 1;
  std::string twists;
};

int cmd_lefschetz(const LefschetzArgs& a, std::ostream& out) {
  const MultitwistResult r = multitwist(parse_twists(a.twists, a.g), a.g);
  Json matrix = Json::array();
  for (std::size_t i = 0; i < r.action.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < r.action.dim(); ++j) row.push_back(r.action(i, j).get_str());
    matrix.push_back(std::move(row));
  }
  Json j;
  j["g"] = a.g;
  j["lefschetz"] = r.lefschetz.get_str();
  j["trace"] = r.action.trace().get_str();
  j["symplectic"] = r.action.is_symplectic();
  j["basis"] = "a1..ag, b1..bg; column j is the image of basis vector j";
  j["action"] = matrix;
  out << dump(j);
  return kOk;
}

struct VerifyArgs {
  std::vector<std::string> suites;
  bool all = false;
  std::uint64_t seed = 7;
  std::optional<unsigned> cases;
  unsigned jobs = 1;
  std::string out;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (a.all == !a.suites.empty()) throw UsageError("give either --all or at least one --suite");
  for (const auto& s : a.suites) {
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
      throw UsageError("unknown suite '" + s + "'");
    }
  }
  SuiteConfig cfg;
  cfg.seed = a.seed;
  cfg.cases = a.cases;
  cfg.jobs = a.jobs;
  const VerifyReport v = run_suites(a.all ? suite_names() : a.suites, cfg);
  for (const auto& s : v.suites) {
    err << (s.passed ? "PASS " : "FAIL ") << s.name << " (" << s.cases - s.failures << "/" << s.cases << ")";
    if (!s.passed) err << ": " << s.detail;
    err << '\n';
  }
  emit(a.out, dump(v.json), out);
  return v.passed ? kOk : kAssertion;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified dilatation bounds toolbox"};
  app.name("dillab");
  app.require_subcommand(1);
  app.set_version_flag("--version", "dillab 0.3.0");
  std::function<int()> action;

  PfArgs pf;
  auto* c_pf = app.add_subcommand("pf", "Irreducibility, positivity and certified PF enclosure of a matrix file");
  c_pf->add_option("matrix", pf.matrix, "Matrix file (text or JSON)")->required();
  c_pf->add_option("--rel-width", pf.rel_width, "Target relative width")->capture_default_str();
  c_pf->callback([&] { action = [&] { return cmd_pf(pf, out); }; });

  PathsArgs paths;
  auto* c_paths = app.add_subcommand("paths", "Path counts P(i, d) for d = 0..D");
  c_paths->add_option("matrix", paths.matrix, "Matrix file")->required();
  c_paths->add_option("--vertex,-i", paths.vertex, "Start vertex (1-based)")->capture_default_str();
  c_paths->add_option("--d", paths.d, "Maximum length")->capture_default_str();
  c_paths->add_flag("--limit-check", paths.limit, "Compare P(i, D)^(1/D) with the PF enclosure");
  c_paths->add_option("--tol", paths.tol, "Tolerance for --limit-check")->capture_default_str();
  c_paths->callback([&] { action = [&] { return cmd_paths(paths, out); }; });

  SubdivideArgs sub;
  auto* c_sub = app.add_subcommand("subdivide", "Subdivide the out-edge of a vertex with in/out multiplicity one");
  c_sub->add_option("matrix", sub.matrix, "Matrix file")->required();
  c_sub->add_option("--vertex,-i", sub.vertex, "Vertex (1-based)")->required();
  c_sub->add_option("--emit", sub.emit, "Write the subdivided matrix JSON here");
  c_sub->callback([&] { action = [&] { return cmd_subdivide(sub, out); }; });

  HkRootArgs hk;
  auto* c_hk = app.add_subcommand("hk-root", "Certified largest root of T_{s,t}, T_m or a JSON polynomial");
  c_hk->add_option("--s", hk.s, "s >= 1");
  c_hk->add_option("--t", hk.t, "t >= 1");
  c_hk->add_option("--m", hk.m, "m >= 2");
  c_hk->add_option("--poly", hk.poly_file, "Polynomial JSON file {\"coeffs\": {...}}");
  c_hk->add_option("--rel-width", hk.rel_width, "Target relative width")->capture_default_str();
  c_hk->callback([&] { action = [&] { return cmd_hk_root(hk, out); }; });

  TorusArgs torus;
  auto* c_torus = app.add_subcommand("torus-matrix", "2n x 2n torus-family transition matrix");
  c_torus->add_option("--n", torus.n, "n >= 5")->required();
  c_torus->add_option("--emit", torus.emit, "Write the matrix here");
  c_torus->add_option("--format", torus.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  c_torus->callback([&] { action = [&] { return cmd_torus(torus, out); }; });

  CoverArgs cover;
  auto* c_cover = app.add_subcommand("cover-bound", "Certified upper bound from the genus-g cover family");
  c_cover->add_option("--g", cover.g, "Genus >= 2")->required();
  c_cover->add_option("--n", cover.n, "Marked points")->required();
  c_cover->add_option("--csv", cover.csv, "Append a row to this CSV file");
  c_cover->callback([&] { action = [&] { return cmd_cover(cover, out); }; });

  auto* c_bounds = app.add_subcommand("bounds", "Bound tables");
  c_bounds->require_subcommand(1);
  BoundsArgs table;
  table.jobs = default_jobs();
  auto* c_table = c_bounds->add_subcommand("table", "Sandwich table of lower and upper bounds");
  c_table->add_option("--g", table.g, "Genus >= 2")->required();
  c_table->add_option("--n", table.n, "Range LO:HI")->required();
  c_table->add_option("--format", table.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  c_table->add_option("--out", table.out, "Output file (default stdout)");
  c_table->add_option("--jobs", table.jobs, "Worker threads (default $DILLAB_JOBS or 1)")->check(CLI::PositiveNumber);
  c_table->callback([&] { action = [&] { return cmd_bounds_table(table, out); }; });
  RefsArgs refs;
  auto* c_refs = c_bounds->add_subcommand("refs", "Previously known bounds for comparison");
  c_refs->add_option("--g", refs.g, "Genus")->required();
  c_refs->add_option("--n", refs.n, "Marked points")->required();
  c_refs->callback([&] { action = [&] { return cmd_bounds_refs(refs, out); }; });

  LefschetzArgs lef;
  auto* c_lef = app.add_subcommand("lefschetz", "Lefschetz number of a multitwist");
  c_lef->add_option("--g", lef.g, "Genus >= 1")->required();
  c_lef->add_option("--twists", lef.twists, "e.g. \"a1:3,a2:-1\"; empty for the identity")->capture_default_str();
  c_lef->callback([&] { action = [&] { return cmd_lefschetz(lef, out); }; });

  VerifyArgs ver;
  ver.jobs = default_jobs();
  auto* c_ver = app.add_subcommand("verify", "Run verification suites");
  std::string suite_list = "Suites: ";
  for (const auto& s : suite_names()) suite_list += s + " ";
  c_ver->add_option("--suite", ver.suites, suite_list);
  c_ver->add_flag("--all", ver.all, "Run every suite");
  c_ver->add_option("--seed", ver.seed, "Seed for randomized suites")->capture_default_str();
  c_ver->add_option("--cases", ver.cases, "Override the case count")->check(CLI::PositiveNumber);
  c_ver->add_option("--jobs", ver.jobs, "Worker threads (default $DILLAB_JOBS or 1)")->check(CLI::PositiveNumber);
  c_ver->add_option("--out", ver.out, "Report file (default stdout)");
  c_ver->callback([&] { action = [&] { return cmd_verify(ver, out, err); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << "dillab 0.3.0\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    // Help for the innermost subcommand that was selected.
    const CLI::App* sub = &app;
    while (!sub->get_subcommands().empty()) sub = sub->get_subcommands().front();
    err << sub->help();
    return kUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case Errc::ValidationFailed:
      case Errc::NoSignChange:
      case Errc::IncrementTooLarge:
        return kAssertion;
      default:
        return kUsage;  // the inputs violate a documented precondition
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kAssertion;
  }
}

}  // namespace dillab::app
