#pragma once

#include <cmath>
#include <limits>

namespace chebpol::detail {

/// r^{-s} with a multiply-only path for small integer s.
struct InvPow {
  double s;
  bool integral;
  int si;

  explicit InvPow(double s_) : s(s_) {
    double r = std::round(s_);
    integral = std::fabs(s_ - r) < 1e-14 && r >= 1 && r <= 16;
    si = integral ? static_cast<int>(r) : 0;
  }

  double operator()(double r) const {
    if (r <= 0.0) return std::numeric_limits<double>::infinity();
    if (!integral) return std::pow(r, -s);
    double acc = 1.0, base = 1.0 / r;
    int k = si;
    while (k) {
      if (k & 1) acc *= base;
      base *= base;
      k >>= 1;
    }
    return acc;
  }
};

}  // namespace chebpol::detail
