#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "io.hpp"

namespace dillab::app {

struct SuiteConfig {
  std::uint64_t seed = 7;
  std::optional<unsigned> cases;  // suite default when empty
  unsigned jobs = 1;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  unsigned cases = 0;
  unsigned failures = 0;
  /// One-line description of what failed; empty when passed.
  std::string detail;
  Json report;
};

/// Suite names in the order `verify --all` runs them.
const std::vector<std::string>& suite_names();

/// InvalidArgument for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteConfig& config);

struct VerifyReport {
  bool passed = false;
  std::vector<SuiteResult> suites;
  Json json;
};

VerifyReport run_suites(const std::vector<std::string>& names, const SuiteConfig& config);

}  // namespace dillab::app
