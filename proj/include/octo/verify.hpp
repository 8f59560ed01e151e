#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace octo {

struct CheckResult {
  std::string name;
  double tol = 0.0;
  int failures = 0;
  double worst = 0.0;  // worst scaled residual, recorded even on pass
};

struct VerifySuiteResult {
  std::string suite;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;  // e.g. census frequencies

  int failures() const;
  double worst_residual() const;
};

const std::vector<std::string>& suite_names();  // includes "all"

// Runs the named identity suite on seeded random trials. Residuals are
// normalized by the operand scale before comparison, so the default
// tolerances apply at any input magnitude. tol_override > 0 replaces every
// check tolerance. Deterministic for a given seed regardless of threads.
VerifySuiteResult run_suite(const std::string& name, int trials,
                            std::uint64_t seed, int threads = 0,
                            double tol_override = 0.0);

}  // namespace octo
