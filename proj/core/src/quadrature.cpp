#include "chebpol/quadrature.hpp"

#include <cmath>

namespace chebpol {

namespace {

struct Worker {
  const std::function<double(double)>& f;
  double tol_abs;
  int max_depth;
  long evals = 0;

  double simpson(double a, double fa, double m, double fm, double b,
                 double fb) const {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  }

  double recurse(double a, double fa, double m, double fm, double b, double fb,
                 double whole, double eps, int depth, double& err) {
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    evals += 2;
    double left = simpson(a, fa, lm, flm, m, fm);
    double right = simpson(m, fm, rm, frm, b, fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * eps) {
      err += std::fabs(delta) / 15.0;
      return left + right + delta / 15.0;
    }
    return recurse(a, fa, lm, flm, m, fm, left, 0.5 * eps, depth - 1, err) +
           recurse(m, fm, rm, frm, b, fb, right, 0.5 * eps, depth - 1, err);
  }
};

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double rel_tol, int max_depth) {
  if (a == b) return {0.0, 0.0, 0};
  Worker w{f, 0.0, max_depth};
  double m = 0.5 * (a + b);
  double fa = f(a), fm = f(m), fb = f(b);
  w.evals = 3;
  double whole = w.simpson(a, fa, m, fm, b, fb);
  // scale the tolerance off a crude first estimate, with an absolute floor
  double eps = std::max(std::fabs(whole) * rel_tol, 1e-300);
  double err = 0.0;
  double v = w.recurse(a, fa, m, fm, b, fb, whole, eps, max_depth, err);
  // one re-pass if the first estimate was far off the converged value
  if (std::fabs(whole) < 0.25 * std::fabs(v) || std::fabs(whole) > 4.0 * std::fabs(v)) {
    eps = std::max(std::fabs(v) * rel_tol, 1e-300);
    err = 0.0;
    v = w.recurse(a, fa, m, fm, b, fb, whole, eps, max_depth, err);
  }
  return {v, err, w.evals};
}

}  // namespace chebpol
