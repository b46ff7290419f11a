#pragma once

#include <string>
#include <vector>

namespace chebpol {

struct CheckRow {
  std::string claim;
  std::string expected;
  std::string observed;
  std::string tolerance;
  bool pass = false;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckRow> rows;
  bool pass = true;
  double seconds = 0.0;
};

/// Names accepted by run_suite, in the order the acceptance harness runs
/// them: circle-sigma, circle-tau-log, chebyshev-zeros, oracle-equivalence,
/// polar-energy-bound, tiling, limit-distribution, covering-link, epstein,
/// trivials, invariants.
std::vector<std::string> suite_names();

SuiteResult run_suite(const std::string& name);

/// Renders a claim/expected/observed/tolerance/verdict table.
std::string format_table(const SuiteResult& result);

}  // namespace chebpol
