#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cstar/serialize.hpp"

namespace cstar {

struct SuiteConfig {
  std::uint64_t seed = 1;
  int instances = 100;
  /// Random samples per instance for the closed-sum bound suite.
  int samples = 10000;
  /// 0 picks the hardware concurrency.
  int threads = 0;
};

/// One property outcome on one instance. `value` is the measured quantity;
/// for margins lower is worse, for residuals higher is worse.
struct Check {
  std::string property;
  bool pass = false;
  double value = 0.0;
  bool higher_is_worse = true;
};

struct PropertyTally {
  std::string property;
  int passed = 0;
  int failed = 0;
  double worst = 0.0;
  int worst_instance = -1;
  bool higher_is_worse = true;
};

struct SuiteFailure {
  int instance = 0;
  std::string property;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  SuiteConfig config;
  std::vector<PropertyTally> properties;
  std::vector<SuiteFailure> failures;
  /// Per-instance notes such as the (k, s, k′, t) found by the criterion search.
  std::vector<std::string> log;
  std::vector<std::string> warnings;
  /// Instance draws discarded for rank margins below 1e-6.
  int redraws = 0;
  bool passed = true;
};

const std::vector<std::string>& suite_names();

/// Throws ParseError for an unknown suite.
SuiteResult run_suite(const std::string& name, const SuiteConfig& config);

Json report_json(const SuiteResult& r);

}  // namespace cstar
