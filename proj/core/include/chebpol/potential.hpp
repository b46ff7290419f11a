#pragma once

#include <vector>

#include "chebpol/certify.hpp"
#include "chebpol/configuration.hpp"
#include "chebpol/kernel.hpp"
#include "chebpol/set.hpp"

namespace chebpol {

/// U(y; omega) = sum_j K(y, x_j), multiset multiplicity respected. With
/// eps = 0 the value is +inf when y coincides with a source.
double potential_at(const Vec& y, const Configuration& config,
                    const Kernel& kernel);

/// Certified bracket on P(B; omega) = inf_{y in B} U(y; omega).
struct PolarizationEstimate {
  double upper = 0.0;
  double lower = 0.0;
  Vec witness;
  double covering_radius = 0.0;  // cell radius at the witness
  long evaluations = 0;
  int rounds = 0;
  bool budget_exhausted = false;

  double gap() const { return upper - lower; }
};

struct PolarizationOptions {
  double target_gap_abs = 0.0;
  double target_gap_rel = 1e-6;
  int initial_cells_per_axis = 0;
  int max_rounds = 40;
  int refine_per_round = 16;
  long max_evaluations = 50'000'000;

  CertifyOptions certify() const {
    return CertifyOptions{target_gap_abs, target_gap_rel, initial_cells_per_axis,
                          max_rounds, refine_per_round, max_evaluations};
  }
};

/// Bracket on the infimum of the potential over a chart region. The lower
/// bound per cell is the best of two certificates: the node value minus
/// radius times a per-source gradient bound, and the direct sum of worst-case
/// nearest-distance terms.
PolarizationEstimate polarization(const Configuration& config,
                                  const Region& region, const Kernel& kernel,
                                  const PolarizationOptions& options = {});

/// Bracket over the whole set.
PolarizationEstimate polarization(const Configuration& config,
                                  const Kernel& kernel,
                                  const PolarizationOptions& options = {});

/// min over regions of per-region brackets, combined conservatively.
PolarizationEstimate polarization_over_union(const Configuration& config,
                                             const std::vector<Region>& regions,
                                             const Kernel& kernel,
                                             const PolarizationOptions& options = {});

/// Plain minimum of U over explicit nodes (no certificate; used by fixed-mesh
/// invariant checks and oracles). Returns the index of the argmin.
std::pair<double, std::size_t> mesh_min_potential(const std::vector<Vec>& nodes,
                                                  const Configuration& config,
                                                  const Kernel& kernel);

}  // namespace chebpol
