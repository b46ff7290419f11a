#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chebpol/geom.hpp"

namespace chebpol {

class Set;

/// Interaction weight w(a, b); by convention the first argument is the
/// field point and the second the source. Built-ins carry declared bounds
/// used by the Lipschitz certificates: a diagonal lower bound w_min, a sup
/// bound w_max, and a bound on the gradient in the first argument.
struct WeightSpec {
  std::string name = "constant";
  std::function<double(const Vec&, const Vec&)> w;
  double w_min = 1.0;   // diagonal lower bound
  double w_max = 1.0;   // sup over pairs
  double w_inf = 0.0;   // global lower bound over pairs (certificate floors)
  double lipschitz = 0.0;
  bool field_only = false;  // w(a, b) does not depend on the source b
  // optional analytic gradients; a numeric fallback is used when absent
  std::function<Vec(const Vec&, const Vec&)> grad_field;
  std::function<Vec(const Vec&, const Vec&)> grad_source;

  static WeightSpec constant(double c);
  /// w(a, b) = u(a) / v(b).
  static WeightSpec separable(std::function<double(const Vec&)> u,
                              std::function<double(const Vec&)> v,
                              double w_min, double w_max, double lipschitz,
                              std::string name = "separable");
  /// u(theta) = base + amp*cos(theta) on a circle of the given radius, v = 1.
  static WeightSpec circle_cosine(double base, double amp, double radius = 1.0);
  /// u(x) = base + amp*z on the unit sphere in R^3, v = 1.
  static WeightSpec sphere_zcosine(double base, double amp);

  double operator()(const Vec& a, const Vec& b) const { return w(a, b); }
  /// w(x, x); throws CpdViolationError when below the declared bound.
  double diagonal(const Vec& x) const;
};

/// Spot-audits w(x,x) >= w_min on uniform samples of the set.
void audit_weight(const WeightSpec& w, const Set& set, std::size_t samples = 10000,
                  std::uint64_t seed = 1);

enum class KernelKind { riesz, log, weighted_riesz };

std::string to_string(KernelKind k);

/// Riesz, logarithmic, and weighted Riesz kernels with an optional distance
/// clamp eps (eps = 0 keeps the exact singular kernel; infinities are legal
/// values and propagate through minima as expected).
class Kernel {
 public:
  static Kernel riesz(double s, double eps = 0.0);
  static Kernel log_kernel(double eps = 0.0);
  static Kernel weighted_riesz(double s, WeightSpec weight, double eps = 0.0);

  KernelKind kind() const { return kind_; }
  bool is_riesz() const { return kind_ != KernelKind::log; }
  double s() const { return s_; }
  double eps() const { return eps_; }
  const WeightSpec* weight() const {
    return weight_ ? &*weight_ : nullptr;
  }

  Kernel with_eps(double eps) const;

  /// K(x, y): w(x,y)/max(|x-y|, eps)^s or -log(max(|x-y|, eps)).
  double eval(const Vec& x, const Vec& y) const;

  /// sum_j K(y, x_j) over a point list in index order (the hot loop behind
  /// every potential evaluation; factors field-only weights out of the sum).
  double potential_sum(const Vec& y, const std::vector<Vec>& sources) const;

  // certificate data
  double weight_max() const { return weight_ ? weight_->w_max : 1.0; }
  double weight_min() const { return weight_ ? weight_->w_min : 1.0; }
  double weight_lip() const { return weight_ ? weight_->lipschitz : 0.0; }

  /// d/dy K(x, y), used when moving sources.
  Vec grad_source(const Vec& x, const Vec& y) const;
  /// d/dx K(x, y), used when moving field points (energy descent).
  Vec grad_field(const Vec& x, const Vec& y) const;

 private:
  Kernel() = default;
  KernelKind kind_{};
  double s_ = 0.0;
  double eps_ = 0.0;
  std::optional<WeightSpec> weight_;
};

/// Free-function forms mirroring the library surface.
double kernel_eval(const Kernel& k, const Vec& x, const Vec& y);
double diagonal_weight(const WeightSpec& w, const Vec& x);

}  // namespace chebpol
