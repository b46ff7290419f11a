#pragma once

#include <string>
#include <vector>

#include "chebpol/configuration.hpp"
#include "chebpol/kernel.hpp"
#include "chebpol/set.hpp"

namespace chebpol {

/// Weighted Hausdorff mass of a region: integral of w(x,x)^(-d/s) against
/// H_d. Adaptive quadrature through the chart; throws CpdViolationError when
/// the weight dips below its declared diagonal bound.
double weighted_hausdorff(const Set& set, const WeightSpec& weight, double s,
                          const Region& region, double rel_tol = 1e-8);
double weighted_hausdorff(const Set& set, const WeightSpec& weight, double s,
                          double rel_tol = 1e-8);

/// Splits the chart domain into a grid of half-open regions (bins_per_axis
/// entries per chart axis).
std::vector<Region> make_partition(const Set& set,
                                   const std::vector<int>& bins_per_axis);

/// Exact multiset counts per region; boundary points use the half-open
/// convention (lower edge inclusive), so counts always sum to N.
std::vector<std::size_t> empirical_counts(const Configuration& config,
                                          const std::vector<Region>& partition);

/// Sup distance between the empirical CDF of a configuration's chart
/// coordinate and the predicted CDF with density w(x,x)^(-d/s). 1-d sets
/// (interval, circle, curve) only; pass nullptr for the unweighted law.
double cdf_sup_distance(const Configuration& config, const WeightSpec* weight,
                        double s);

struct DistributionReport {
  struct Row {
    std::size_t n = 0;
    double discrepancy = 0.0;
  };
  struct Bin {
    double predicted_fraction = 0.0;
    std::vector<std::size_t> counts;  // per configuration
  };
  std::vector<Row> rows;
  std::vector<Bin> bins;
  double tolerance = 0.0;
  bool decreasing = false;
  bool within_tolerance = false;
  bool pass = false;
  bool out_of_theorem = false;  // s < d or log kernel: report only
  std::string note;
};

/// Empirical-versus-predicted comparison over a sequence of configurations
/// with increasing N. For 1-d sets the discrepancy is the CDF sup distance;
/// for higher-dimensional charts it is the max relative bin error over bins
/// with predicted mass >= 5/N (undersized bins merged, noted).
DistributionReport compare_distribution(const std::vector<Configuration>& configs,
                                        const WeightSpec* weight, double s,
                                        int bins_per_axis, double tolerance,
                                        bool kernel_is_log = false);

}  // namespace chebpol
