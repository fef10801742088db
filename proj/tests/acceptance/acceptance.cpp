// One PASS/FAIL line per acceptance criterion. Exit status is 0 only when
// every criterion passes, apart from those named with --allow-fail.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "suites.hpp"

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSeed = 7;

struct Criterion {
  std::string suite;
  std::string description;
  double max_seconds;  // 0 means no runtime limit
};

// Tolerances (root width 1e-9, path gap 0.05 at d = 200, local-index det
// threshold 1e-3) are pinned inside the suites; runtime limits are pinned here.
const std::vector<Criterion> kCriteria = {
    {"t11-root", "T_{1,1} largest root encloses (3+sqrt5)/2, width <= 1e-9", 1.0},
    {"tm-root-bound", "m = 5..200: root of T_m below m^(3/m), three inequalities, T_m(1) = -4", 120.0},
    {"torus", "n = 5..200: torus matrix sums 9/11, irreducible, hi(mu) <= 9", 300.0},
    {"diagonal-power", "200 matrices with a positive diagonal: M^(2k) > 0 and lo(mu)^(2k) >= k", 0.0},
    {"path-growth", "50 graphs: |P(i,200)^(1/200) - mu| <= 0.05 for every vertex", 0.0},
    {"subdivision", "100 instances: exact path shift, interval ordering, charpoly comparison", 0.0},
    {"multitwist-trace", "200 multitwist systems: trace 2g, L = 2 - 2g, symplectic factors", 0.0},
    {"local-index", "model indices +1, +1, -1 over radii; 50 linear models agree with sign det(A - I)", 0.0},
    {"theta", "Theta(1) = 24 by enumeration, theta(2) = 51840", 1.0},
    {"sandwich", "g = 2, n = 31..1e4: 0 < lower < upper, upper n / log n <= kappa'_2", 300.0},
};

}  // namespace

int main(int argc, char** argv) {
  std::set<std::string> allowed;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--allow-fail" && i + 1 < argc) {
      allowed.insert(argv[++i]);
    } else {
      std::cerr << "usage: dillab_acceptance [--allow-fail NAME]...\n";
      return 2;
    }
  }

  dillab::app::SuiteConfig config;
  config.seed = kSeed;
  unsigned failed = 0;
  unsigned allowed_failed = 0;
  auto report = [&](const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s %-12s %s\n", pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (pass) return;
    if (allowed.count(name)) {
      ++allowed_failed;
    } else {
      ++failed;
    }
  };

  for (const auto& c : kCriteria) {
    const auto start = Clock::now();
    const dillab::app::SuiteResult r = dillab::app::run_suite(c.suite, config);
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = c.max_seconds == 0 || seconds < c.max_seconds;
    char timing[96];
    std::snprintf(timing, sizeof timing, " [%u/%u cases, %.2f s%s]", r.cases - r.failures, r.cases, seconds,
                  in_time ? "" : ", over the runtime limit");
    std::string detail = c.description + timing;
    if (!r.passed) detail += " :: " + r.detail;
    report(c.suite, r.passed && in_time, detail);
  }

  const auto first = dillab::app::run_suites(dillab::app::suite_names(), config).json.dump(2);
  const auto second = dillab::app::run_suites(dillab::app::suite_names(), config).json.dump(2);
  report("determinism", first == second,
         "verify --all --seed 7 twice gives byte-identical reports [" + std::to_string(first.size()) + " bytes]");

  std::printf("%u failed, %u allowed failure(s)\n", failed, allowed_failed);
  return failed == 0 ? 0 : 1;
}
