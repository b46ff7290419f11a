#pragma once

#include <vector>

#include "chebpol/certify.hpp"
#include "chebpol/configuration.hpp"
#include "chebpol/kernel.hpp"

namespace chebpol {

/// Exact minimal pairwise distance (0 for duplicate points).
double separation(const Configuration& config);

/// Certified bracket on max_{y in region} min_j |y - x_j| via mesh
/// maximization of the 1-Lipschitz nearest-distance function.
CertifiedMaxBracket covering_radius(const Configuration& config,
                                    const Region& region,
                                    const CertifyOptions& options = {});
CertifiedMaxBracket covering_radius(const Configuration& config,
                                    const CertifyOptions& options = {});

struct ExtremalStats {
  double separation = 0.0;
  double covering_lower = 0.0;
  double covering_upper = 0.0;
  Vec covering_witness;
  std::size_t n = 0;
};

ExtremalStats extremal_stats(const Configuration& config,
                             const CertifyOptions& options = {});

struct LargeSRow {
  double s = 0.0;
  double polarization_lower = 0.0;
  double polarization_upper = 0.0;
  double pol_root_times_rho = 0.0;    // P^(1/s) * rho_N at bracket midpoints
  double pol_root_rho_lo = 0.0;       // certified enclosure of the product
  double pol_root_rho_hi = 0.0;
  double energy_root_times_delta = 0.0;  // E^(1/s) * delta_N (NaN for N = 1)
};

/// Convergence of P_s^{1/s} * rho and E_s^{1/s} * delta toward 1 for the
/// known-optimal equally spaced configuration (circle sets only).
std::vector<LargeSRow> check_large_s_limits(const Set& set, std::size_t N,
                                            const std::vector<double>& s_values);

}  // namespace chebpol
