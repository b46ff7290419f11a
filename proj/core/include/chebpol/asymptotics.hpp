#pragma once

#include <string>
#include <vector>

#include "chebpol/kernel.hpp"
#include "chebpol/set.hpp"

namespace chebpol {

/// Normalization tau(N): N^(s/d) for s > d, N ln N for s = d.
double tau(double s, int d, double N);

/// Riemann zeta for real s > 1 (alternating-series acceleration).
double riemann_zeta(double s);

/// 2 (2^s - 1) zeta(s), s > 1.
double sigma_1d_exact(double s);

struct EpsteinResult {
  double value = 0.0;
  double final_radius = 0.0;
  double last_rel_change = 0.0;  // |S(R) - S(R/2)| / S(R)
};

/// Sum over nonzero vectors of the unit-covolume equi-triangular lattice of
/// |v|^-s, by direct shell summation with radius doubling. Needs s > 2.
EpsteinResult epstein_zeta_triangular(double s, double rel_tol = 1e-10);

/// Conjectured planar constant ((3^(s/2) - 1)/2) * zeta_Lambda(s); always
/// reported with a conjecture flag downstream.
double sigma_2d_conjectured(double s);

enum class ConstantProvenance { proved, conjectured };

struct PredictedLimit {
  double value = 0.0;
  ConstantProvenance provenance = ConstantProvenance::proved;
};

/// sigma_{s,d} / H^{s,w}_d(A)^{s/d} for the supported sets; pass nullptr for
/// the unweighted law. Throws UnavailableConstantError when d >= 3, s > d.
PredictedLimit predicted_limit(const Set& set, const WeightSpec* weight, double s);

struct RatioSeries {
  double s = 0.0;
  int d = 0;
  bool diagnostic = false;  // true for the s < d series normalized by N
  struct Entry {
    double n = 0.0;
    double value = 0.0;
    double ratio = 0.0;
  };
  std::vector<Entry> entries;
};

struct SigmaEstimate {
  double value = 0.0;
  double uncertainty = 0.0;
  bool low_confidence = false;
  std::string method;
};

/// Fits ratio = c + b * N^(-1/d) on the tail (last half) and returns c; the
/// uncertainty is the spread between the fit and the final ratio.
SigmaEstimate estimate_limit(const RatioSeries& series);

struct ChebyshevSeriesOptions {
  std::size_t mesh_nodes = 8192;
};

/// Diagnostic series P(A; omega_N)/N for integrable kernels (s < d), built
/// on equally spaced configurations. No limit value is asserted.
RatioSeries chebyshev_ratio_series(const Set& set, const Kernel& kernel,
                                   const std::vector<std::size_t>& schedule,
                                   const ChebyshevSeriesOptions& options = {});

}  // namespace chebpol
