// Acceptance harness: runs every verification suite and prints one
// pass/fail line per numbered criterion. Exit code = number of failures.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "chebpol/verify.hpp"

namespace {

struct Criterion {
  int id;
  const char* label;
  std::vector<std::string> suites;
};

}  // namespace

int main() {
  using chebpol::run_suite;
  using chebpol::SuiteResult;

  const std::vector<Criterion> criteria = {
      {1, "circle constant, s=3 (normalized series vs 14 zeta(3))",
       {"circle-sigma"}},
      {2, "s=d=1 circle law (N log N normalization vs 1/pi)",
       {"circle-tau-log"}},
      {3, "log-kernel interval optima at the classical node sets",
       {"chebyshev-zeros"}},
      {4, "solver matches the exhaustive small-mesh oracle",
       {"oracle-equivalence"}},
      {5, "polarization >= energy/(N-1) on all 12 instances",
       {"polar-energy-bound"}},
      {6, "cube tiling inequality P(tiled) >= m^s P(base)", {"tiling"}},
      {7, "weighted limit distribution at desk scale", {"limit-distribution"}},
      {8, "large-s covering link on the circle", {"covering-link"}},
      {9, "triangular lattice sum consistency", {"epstein"}},
      {10, "trivial examples, invariances, determinism",
       {"trivials", "invariants"}},
  };

  auto t0 = std::chrono::steady_clock::now();
  int failures = 0;
  std::vector<SuiteResult> details;
  for (const Criterion& c : criteria) {
    bool pass = true;
    double seconds = 0.0;
    std::string failing;
    for (const std::string& name : c.suites) {
      SuiteResult r = run_suite(name);
      seconds += r.seconds;
      if (!r.pass) {
        pass = false;
        for (const auto& row : r.rows)
          if (!row.pass)
            failing += "\n        " + row.claim + ": expected " + row.expected +
                       ", observed " + row.observed;
      }
      details.push_back(std::move(r));
    }
    std::printf("[%2d] %-4s %s (%.1fs)%s\n", c.id, pass ? "PASS" : "FAIL",
                c.label, seconds, failing.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }
  double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  std::printf("%d/%zu criteria passed in %.1fs\n", int(criteria.size()) - failures,
              criteria.size(), total);

  if (failures) {
    std::printf("\nfull tables for failing suites:\n");
    for (const SuiteResult& r : details)
      if (!r.pass) std::printf("%s", chebpol::format_table(r).c_str());
  }
  return failures;
}
