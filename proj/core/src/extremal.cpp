#include "chebpol/extremal.hpp"

#include <cmath>
#include <limits>

#include "chebpol/energy.hpp"
#include "chebpol/errors.hpp"
#include "chebpol/potential.hpp"
#include "chebpol/solver.hpp"

namespace chebpol {

double separation(const Configuration& config) {
  if (config.size() < 2) throw InvalidArgumentError("separation: need N >= 2");
  GridIndex idx(config.points());
  return idx.min_pairwise_distance();
}

CertifiedMaxBracket covering_radius(const Configuration& config,
                                    const Region& region,
                                    const CertifyOptions& options) {
  const auto& pts = config.points();
  auto nearest = [&pts](const Vec& y) {
    double best = std::numeric_limits<double>::infinity();
    for (const Vec& x : pts) best = std::min(best, dist(y, x));
    return best;
  };
  return certified_max_lip1(config.set(), region, nearest, options);
}

CertifiedMaxBracket covering_radius(const Configuration& config,
                                    const CertifyOptions& options) {
  return covering_radius(config, config.set().full_region(), options);
}

ExtremalStats extremal_stats(const Configuration& config,
                             const CertifyOptions& options) {
  ExtremalStats st;
  st.n = config.size();
  st.separation = config.size() >= 2 ? separation(config) : 0.0;
  CertifiedMaxBracket c = covering_radius(config, options);
  st.covering_lower = c.lower;
  st.covering_upper = c.upper;
  st.covering_witness = c.witness;
  return st;
}

std::vector<LargeSRow> check_large_s_limits(const Set& set, std::size_t N,
                                            const std::vector<double>& s_values) {
  if (set.kind() != SetKind::circle)
    throw InvalidArgumentError(
        "check_large_s_limits: known-optimal configurations only on circles");
  Configuration config = seed_configuration(set, N, SeedStyle::equally_spaced);

  CertifyOptions copt;
  copt.target_gap_rel = 1e-8;
  CertifiedMaxBracket rho = covering_radius(config, copt);
  double rho_mid = 0.5 * (rho.lower + rho.upper);
  double delta = N >= 2 ? separation(config) : 0.0;

  std::vector<LargeSRow> rows;
  rows.reserve(s_values.size());
  for (double s : s_values) {
    Kernel kernel = Kernel::riesz(s);
    PolarizationOptions popt;
    popt.target_gap_rel = 1e-6;
    PolarizationEstimate est = polarization(config, kernel, popt);
    LargeSRow row;
    row.s = s;
    row.polarization_lower = est.lower;
    row.polarization_upper = est.upper;
    double pol_mid = 0.5 * (est.lower + est.upper);
    row.pol_root_times_rho = std::pow(pol_mid, 1.0 / s) * rho_mid;
    row.pol_root_rho_lo = std::pow(est.lower, 1.0 / s) * rho.lower;
    row.pol_root_rho_hi = std::pow(est.upper, 1.0 / s) * rho.upper;
    if (N >= 2) {
      double e = energy_of(config, kernel);
      row.energy_root_times_delta = std::pow(e, 1.0 / s) * delta;
    } else {
      row.energy_root_times_delta = std::numeric_limits<double>::quiet_NaN();
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace chebpol
