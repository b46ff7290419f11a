#pragma once

#include <functional>

namespace chebpol {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

/// Adaptive composite Simpson integration of f over [a, b] to the requested
/// relative tolerance (falls back to an absolute floor for near-zero
/// integrals). Deterministic recursion order.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double rel_tol = 1e-10,
                           int max_depth = 48);

}  // namespace chebpol
