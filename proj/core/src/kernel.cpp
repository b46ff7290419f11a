#include "chebpol/kernel.hpp"

#include <cmath>
#include <limits>

#include "chebpol/detail/inv_pow.hpp"

#include "chebpol/errors.hpp"
#include "chebpol/set.hpp"

namespace chebpol {

WeightSpec WeightSpec::constant(double c) {
  if (!(c > 0)) throw InvalidArgumentError("weight constant: need c > 0");
  WeightSpec w;
  w.name = "constant(" + std::to_string(c) + ")";
  w.w = [c](const Vec&, const Vec&) { return c; };
  w.w_min = c;
  w.w_max = c;
  w.w_inf = c;
  w.lipschitz = 0.0;
  w.field_only = true;
  w.grad_field = [](const Vec& a, const Vec&) { return Vec(a.dim()); };
  w.grad_source = [](const Vec&, const Vec& b) { return Vec(b.dim()); };
  return w;
}

WeightSpec WeightSpec::separable(std::function<double(const Vec&)> u,
                                 std::function<double(const Vec&)> v,
                                 double w_min, double w_max, double lipschitz,
                                 std::string name) {
  if (!u || !v) throw InvalidArgumentError("separable weight: missing factor");
  if (!(w_min > 0)) throw InvalidArgumentError("separable weight: need w_min > 0");
  WeightSpec w;
  w.name = std::move(name);
  w.w = [u, v](const Vec& a, const Vec& b) { return u(a) / v(b); };
  w.w_min = w_min;
  w.w_max = w_max;
  w.w_inf = 0.0;
  w.lipschitz = lipschitz;
  return w;
}

WeightSpec WeightSpec::circle_cosine(double base, double amp, double radius) {
  if (!(base - std::fabs(amp) > 0))
    throw InvalidArgumentError("circle_cosine weight: not positive on the diagonal");
  WeightSpec w;
  w.name = "cosine(" + std::to_string(base) + "," + std::to_string(amp) + ")";
  w.w = [base, amp, radius](const Vec& a, const Vec& b) {
    (void)b;
    return base + amp * a[0] / radius;  // cos(theta) for points on the circle
  };
  w.w_min = base - std::fabs(amp);
  w.w_max = base + std::fabs(amp);
  w.w_inf = base - std::fabs(amp);
  w.lipschitz = std::fabs(amp) / radius;
  w.field_only = true;
  w.grad_source = [](const Vec&, const Vec& b) { return Vec(b.dim()); };
  return w;
}

WeightSpec WeightSpec::sphere_zcosine(double base, double amp) {
  if (!(base - std::fabs(amp) > 0))
    throw InvalidArgumentError("sphere_zcosine weight: not positive on the diagonal");
  WeightSpec w;
  w.name = "zcosine(" + std::to_string(base) + "," + std::to_string(amp) + ")";
  w.w = [base, amp](const Vec& a, const Vec&) { return base + amp * a[2]; };
  w.w_min = base - std::fabs(amp);
  w.w_max = base + std::fabs(amp);
  w.w_inf = base - std::fabs(amp);
  w.lipschitz = std::fabs(amp);
  w.field_only = true;
  w.grad_source = [](const Vec&, const Vec& b) { return Vec(b.dim()); };
  return w;
}

double WeightSpec::diagonal(const Vec& x) const {
  double v = w(x, x);
  if (!(v >= w_min * (1.0 - 1e-12)))
    throw CpdViolationError("weight below declared diagonal bound");
  return v;
}

void audit_weight(const WeightSpec& w, const Set& set, std::size_t samples,
                  std::uint64_t seed) {
  for (const Vec& x : set.sample_uniform(samples, seed)) w.diagonal(x);
}

std::string to_string(KernelKind k) {
  switch (k) {
    case KernelKind::riesz: return "riesz";
    case KernelKind::log: return "log";
    case KernelKind::weighted_riesz: return "weighted-riesz";
  }
  return "?";
}

Kernel Kernel::riesz(double s, double eps) {
  if (!(s > 0)) throw InvalidArgumentError("riesz: need s > 0");
  if (eps < 0) throw InvalidArgumentError("kernel: need eps >= 0");
  Kernel k;
  k.kind_ = KernelKind::riesz;
  k.s_ = s;
  k.eps_ = eps;
  return k;
}

Kernel Kernel::log_kernel(double eps) {
  if (eps < 0) throw InvalidArgumentError("kernel: need eps >= 0");
  Kernel k;
  k.kind_ = KernelKind::log;
  k.eps_ = eps;
  return k;
}

Kernel Kernel::weighted_riesz(double s, WeightSpec weight, double eps) {
  if (!(s > 0)) throw InvalidArgumentError("riesz: need s > 0");
  if (eps < 0) throw InvalidArgumentError("kernel: need eps >= 0");
  if (!weight.w) throw InvalidArgumentError("weighted kernel: missing weight");
  Kernel k;
  k.kind_ = KernelKind::weighted_riesz;
  k.s_ = s;
  k.eps_ = eps;
  k.weight_ = std::move(weight);
  return k;
}

Kernel Kernel::with_eps(double eps) const {
  Kernel k = *this;
  if (eps < 0) throw InvalidArgumentError("kernel: need eps >= 0");
  k.eps_ = eps;
  return k;
}

double Kernel::eval(const Vec& x, const Vec& y) const {
  double r = std::max(dist(x, y), eps_);
  switch (kind_) {
    case KernelKind::log:
      return r == 0.0 ? std::numeric_limits<double>::infinity() : -std::log(r);
    case KernelKind::riesz:
      return r == 0.0 ? std::numeric_limits<double>::infinity()
                      : std::pow(r, -s_);
    case KernelKind::weighted_riesz: {
      double w = (*weight_)(x, y);
      if (r == 0.0) return std::numeric_limits<double>::infinity();
      return w * std::pow(r, -s_);
    }
  }
  return 0.0;
}

namespace {

Vec numeric_grad(const std::function<double(const Vec&)>& f, const Vec& at) {
  Vec g(at.dim());
  double h = 1e-6 * (1.0 + at.norm());
  for (int i = 0; i < at.dim(); ++i) {
    Vec lo = at, hi = at;
    lo[i] -= h;
    hi[i] += h;
    g[i] = (f(hi) - f(lo)) / (2.0 * h);
  }
  return g;
}

}  // namespace

Vec Kernel::grad_source(const Vec& x, const Vec& y) const {
  Vec g(y.dim());
  double r = dist(x, y);
  double r_eff = std::max(r, eps_ > 0 ? eps_ : 1e-300);
  if (kind_ == KernelKind::log) {
    double inv2 = 1.0 / (r_eff * r_eff);
    if (r > eps_)
      for (int i = 0; i < y.dim(); ++i) g[i] = (x[i] - y[i]) * inv2;
    return g;
  }
  double w = weight_ ? (*weight_)(x, y) : 1.0;
  double coef = s_ * w * std::pow(r_eff, -s_ - 2.0);
  if (r > eps_)
    for (int i = 0; i < y.dim(); ++i) g[i] = coef * (x[i] - y[i]);
  if (weight_) {
    Vec gw = weight_->grad_source
                 ? weight_->grad_source(x, y)
                 : numeric_grad([&](const Vec& b) { return (*weight_)(x, b); }, y);
    double rs = std::pow(r_eff, -s_);
    for (int i = 0; i < y.dim(); ++i) g[i] += gw[i] * rs;
  }
  return g;
}

Vec Kernel::grad_field(const Vec& x, const Vec& y) const {
  Vec g(x.dim());
  double r = dist(x, y);
  double r_eff = std::max(r, eps_ > 0 ? eps_ : 1e-300);
  if (kind_ == KernelKind::log) {
    double inv2 = 1.0 / (r_eff * r_eff);
    if (r > eps_)
      for (int i = 0; i < x.dim(); ++i) g[i] = (y[i] - x[i]) * inv2;
    return g;
  }
  double w = weight_ ? (*weight_)(x, y) : 1.0;
  double coef = s_ * w * std::pow(r_eff, -s_ - 2.0);
  if (r > eps_)
    for (int i = 0; i < x.dim(); ++i) g[i] = coef * (y[i] - x[i]);
  if (weight_) {
    Vec gw = weight_->grad_field
                 ? weight_->grad_field(x, y)
                 : numeric_grad([&](const Vec& a) { return (*weight_)(a, y); }, x);
    double rs = std::pow(r_eff, -s_);
    for (int i = 0; i < x.dim(); ++i) g[i] += gw[i] * rs;
  }
  return g;
}

double Kernel::potential_sum(const Vec& y, const std::vector<Vec>& sources) const {
  if (kind_ == KernelKind::log) {
    double sum = 0.0;
    for (const Vec& x : sources) {
      double r = std::max(dist(y, x), eps_);
      sum += r == 0.0 ? std::numeric_limits<double>::infinity() : -std::log(r);
    }
    return sum;
  }
  detail::InvPow rs(s_);
  if (kind_ == KernelKind::riesz || weight_->field_only) {
    double sum = 0.0;
    for (const Vec& x : sources) sum += rs(std::max(dist(y, x), eps_));
    if (kind_ == KernelKind::weighted_riesz && !sources.empty())
      sum *= (*weight_)(y, sources.front());
    return sum;
  }
  double sum = 0.0;
  for (const Vec& x : sources)
    sum += (*weight_)(y, x) * rs(std::max(dist(y, x), eps_));
  return sum;
}

double kernel_eval(const Kernel& k, const Vec& x, const Vec& y) {
  return k.eval(x, y);
}

double diagonal_weight(const WeightSpec& w, const Vec& x) { return w.diagonal(x); }

}  // namespace chebpol
