#pragma once

#include <functional>
#include <vector>

#include "chebpol/geom.hpp"
#include "chebpol/set.hpp"

namespace chebpol {

/// Objective for certified minimization over a region: `value` evaluates the
/// function at a node; `cell_lower` returns a number guaranteed to be <= the
/// infimum of the function over the chart cell, given its node, node value
/// and ambient covering radius.
struct CertifiedObjective {
  std::function<double(const Vec&)> value;
  std::function<double(double node_value, const Vec& node, const Box& cell,
                       double radius)>
      cell_lower;
};

struct CertifyOptions {
  double target_gap_abs = 0.0;   // stop when upper - lower <= this ...
  double target_gap_rel = 1e-6;  // ... or <= rel * max(|upper|, tiny)
  int initial_cells_per_axis = 0;  // 0 = pick so the initial count is ~64
  int max_rounds = 40;
  int refine_per_round = 16;
  long max_evaluations = 50'000'000;
};

struct CertifiedBracket {
  double upper = 0.0;  // least node value seen: an upper bound on the infimum
  double lower = 0.0;  // certified lower bound on the infimum
  Vec witness;         // node attaining `upper`
  double witness_radius = 0.0;
  long evaluations = 0;
  int rounds = 0;
  bool budget_exhausted = false;

  double gap() const { return upper - lower; }
};

/// Adaptive certified minimization: meshes the region in chart cells,
/// repeatedly refines the cells with the weakest lower bounds, and returns a
/// bracket that always contains inf over the region.
CertifiedBracket certified_min(const Set& set, const Region& region,
                               const CertifiedObjective& objective,
                               const CertifyOptions& options = {});

/// Certified maximization for 1-Lipschitz objectives (nearest-distance
/// functions): sup over the region lies in [upper_seen, upper_seen + slack].
struct CertifiedMaxBracket {
  double lower = 0.0;  // greatest node value seen: a lower bound on the sup
  double upper = 0.0;  // certified upper bound on the sup
  Vec witness;
  long evaluations = 0;
  int rounds = 0;
  bool budget_exhausted = false;

  double gap() const { return upper - lower; }
};

CertifiedMaxBracket certified_max_lip1(const Set& set, const Region& region,
                                       const std::function<double(const Vec&)>& f,
                                       const CertifyOptions& options = {});

}  // namespace chebpol
