#pragma once

// Seeded invariant sweeps over the whole library, as run by `twr verify`.

#include <cstdint>
#include <string>
#include <vector>

namespace twr {

struct VerifyConfig {
  std::uint64_t seed = 0;
  std::uint64_t cases = 10000;
  int dim = 4;
  double tol = 1e-10;
};

struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = true;
  // Inputs of the first case that exceeded the tolerance, for reproduction.
  std::string first_failure;
};

// Names of all suites, in execution order.
std::vector<std::string> verification_suites();

// Runs one suite by name; throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name, const VerifyConfig& config);

std::vector<SuiteResult> run_verification(const VerifyConfig& config);

}  // namespace twr
