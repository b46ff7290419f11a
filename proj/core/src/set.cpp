#include "chebpol/set.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "chebpol/errors.hpp"
#include "chebpol/quadrature.hpp"
#include "chebpol/rng.hpp"

namespace chebpol {

namespace {

double sphere_area(int p) {  // H_{p-1}(S^{p-1})
  return 2.0 * std::pow(kPi, p / 2.0) / std::tgamma(p / 2.0);
}

double ball_volume(int p) {  // H_p(B^p)
  return std::pow(kPi, p / 2.0) / std::tgamma(p / 2.0 + 1.0);
}

double chord(double radius, double arc) {
  arc = std::min(arc, kPi * radius);
  return 2.0 * radius * std::sin(arc / (2.0 * radius));
}

double reduce_angle(double t) {  // into [0, 2pi)
  t = std::fmod(t, kTwoPi);
  if (t < 0) t += kTwoPi;
  if (t == kTwoPi) t = 0.0;
  return t;
}

}  // namespace

std::string to_string(SetKind k) {
  switch (k) {
    case SetKind::interval: return "interval";
    case SetKind::circle: return "circle";
    case SetKind::sphere: return "sphere";
    case SetKind::ball: return "ball";
    case SetKind::cube: return "cube";
    case SetKind::curve: return "curve";
  }
  return "?";
}

std::string Vec::str() const {
  std::string s = "(";
  for (int i = 0; i < dim_; ++i) {
    if (i) s += ", ";
    s += std::to_string(c_[i]);
  }
  return s + ")";
}

struct Set::CurveData {
  std::function<Vec(double)> gamma;
  std::function<Vec(double)> dgamma;
  double rel_tol = 1e-10;
  // cumulative arclength table over an even parameter grid
  std::vector<double> cum_len;  // size knots+1
  double total_len = 0.0;
  static constexpr int kKnots = 4096;
};

Set Set::interval(double a, double b) {
  if (!(b > a)) throw InvalidArgumentError("interval: need b > a");
  Set s;
  s.kind_ = SetKind::interval;
  s.ambient_dim_ = 1;
  s.hausdorff_dim_ = 1;
  s.a_ = a;
  s.b_ = b;
  s.measure_ = b - a;
  s.diameter_ = b - a;
  return s;
}

Set Set::circle(double radius) {
  if (!(radius > 0)) throw InvalidArgumentError("circle: need radius > 0");
  Set s;
  s.kind_ = SetKind::circle;
  s.ambient_dim_ = 2;
  s.hausdorff_dim_ = 1;
  s.radius_ = radius;
  s.measure_ = kTwoPi * radius;
  s.diameter_ = 2 * radius;
  return s;
}

Set Set::sphere(int p) {
  if (p < 2 || p > Vec::kMaxDim)
    throw InvalidArgumentError("sphere: ambient dimension out of range");
  Set s;
  s.kind_ = SetKind::sphere;
  s.ambient_dim_ = p;
  s.hausdorff_dim_ = p - 1;
  s.measure_ = sphere_area(p);
  s.diameter_ = 2.0;
  return s;
}

Set Set::ball(int p) {
  if (p < 1 || p > Vec::kMaxDim)
    throw InvalidArgumentError("ball: ambient dimension out of range");
  Set s;
  s.kind_ = SetKind::ball;
  s.ambient_dim_ = p;
  s.hausdorff_dim_ = p;
  s.measure_ = ball_volume(p);
  s.diameter_ = 2.0;
  return s;
}

Set Set::cube(int p) {
  if (p < 1 || p > Vec::kMaxDim)
    throw InvalidArgumentError("cube: ambient dimension out of range");
  Set s;
  s.kind_ = SetKind::cube;
  s.ambient_dim_ = p;
  s.hausdorff_dim_ = p;
  s.measure_ = 1.0;
  s.diameter_ = std::sqrt(double(p));
  return s;
}

Set Set::curve(std::function<Vec(double)> gamma,
               std::function<Vec(double)> dgamma, int ambient_dim,
               double arclength_rel_tol) {
  if (!gamma || !dgamma) throw InvalidArgumentError("curve: missing map");
  if (ambient_dim < 1 || ambient_dim > Vec::kMaxDim)
    throw InvalidArgumentError("curve: ambient dimension out of range");

  auto data = std::make_shared<Set::CurveData>();
  data->gamma = std::move(gamma);
  data->dgamma = std::move(dgamma);
  data->rel_tol = arclength_rel_tol;

  // speed audit + cumulative length table
  const int K = Set::CurveData::kKnots;
  double max_speed = 0.0, min_speed = 1e300;
  std::vector<double> speed(K + 1);
  for (int i = 0; i <= K; ++i) {
    double t = double(i) / K;
    speed[i] = data->dgamma(t).norm();
    max_speed = std::max(max_speed, speed[i]);
    min_speed = std::min(min_speed, speed[i]);
  }
  if (!(max_speed > 0) || min_speed < 1e-10 * max_speed)
    throw InvalidSetError("curve: vanishing derivative detected");

  data->cum_len.resize(K + 1);
  data->cum_len[0] = 0.0;
  for (int i = 0; i < K; ++i) {
    double t0 = double(i) / K, t1 = double(i + 1) / K;
    double mid = data->dgamma(0.5 * (t0 + t1)).norm();
    data->cum_len[i + 1] =
        data->cum_len[i] + (t1 - t0) / 6.0 * (speed[i] + 4.0 * mid + speed[i + 1]);
  }
  data->total_len = data->cum_len[K];

  Set s;
  s.kind_ = SetKind::curve;
  s.ambient_dim_ = ambient_dim;
  s.hausdorff_dim_ = 1;
  s.curve_ = data;
  auto speed_fn = [data](double t) { return data->dgamma(t).norm(); };
  s.measure_ = integrate(speed_fn, 0.0, 1.0, arclength_rel_tol).value;

  // bounding-box diagonal of a dense parameter sample (tolerance scale only)
  Vec lo = data->gamma(0.0), hi = lo;
  for (int i = 1; i <= K; ++i) {
    Vec x = data->gamma(double(i) / K);
    for (int d = 0; d < ambient_dim; ++d) {
      lo[d] = std::min(lo[d], x[d]);
      hi[d] = std::max(hi[d], x[d]);
    }
  }
  s.diameter_ = dist(lo, hi);
  if (!(s.diameter_ > 0)) throw InvalidSetError("curve: degenerate extent");
  return s;
}

std::string Set::describe() const {
  switch (kind_) {
    case SetKind::interval:
      return "interval(" + std::to_string(a_) + ", " + std::to_string(b_) + ")";
    case SetKind::circle: return "circle(r=" + std::to_string(radius_) + ")";
    case SetKind::sphere: return "sphere(p=" + std::to_string(ambient_dim_) + ")";
    case SetKind::ball: return "ball(p=" + std::to_string(ambient_dim_) + ")";
    case SetKind::cube: return "cube(p=" + std::to_string(ambient_dim_) + ")";
    case SetKind::curve: return "curve";
  }
  return "?";
}

bool Set::contains(const Vec& x, double tol) const {
  if (x.dim() != ambient_dim_) return false;
  return dist(x, project(x)) <= tol;
}

Vec Set::project(const Vec& x) const {
  switch (kind_) {
    case SetKind::interval: {
      Vec y(1);
      y[0] = std::clamp(x[0], a_, b_);
      return y;
    }
    case SetKind::circle: {
      double n = x.norm();
      if (n == 0.0) return Vec{-radius_, 0.0};
      return (radius_ / n) * x;
    }
    case SetKind::sphere: {
      double n = x.norm();
      if (n == 0.0) {
        Vec y(ambient_dim_);
        y[0] = -1.0;
        return y;
      }
      return (1.0 / n) * x;
    }
    case SetKind::ball: {
      double n = x.norm();
      return n <= 1.0 ? x : (1.0 / n) * x;
    }
    case SetKind::cube: {
      Vec y(ambient_dim_);
      for (int i = 0; i < ambient_dim_; ++i) y[i] = std::clamp(x[i], 0.0, 1.0);
      return y;
    }
    case SetKind::curve: {
      const int K = 2048;
      double best_t = 0.0, best_d = 1e300;
      for (int i = 0; i <= K; ++i) {
        double t = double(i) / K;
        double d = dist2(curve_->gamma(t), x);
        if (d < best_d) {
          best_d = d;
          best_t = t;
        }
      }
      // golden-section polish around the best grid node
      double lo = std::max(0.0, best_t - 1.0 / K);
      double hi = std::min(1.0, best_t + 1.0 / K);
      const double gr = 0.61803398874989484820;
      double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
      double fc = dist2(curve_->gamma(c), x), fd = dist2(curve_->gamma(d), x);
      for (int it = 0; it < 80; ++it) {
        if (fc < fd) {
          hi = d;
          d = c;
          fd = fc;
          c = hi - gr * (hi - lo);
          fc = dist2(curve_->gamma(c), x);
        } else {
          lo = c;
          c = d;
          fc = fd;
          d = lo + gr * (hi - lo);
          fd = dist2(curve_->gamma(d), x);
        }
      }
      double t = 0.5 * (lo + hi);
      return dist2(curve_->gamma(t), x) < best_d ? curve_->gamma(t)
                                                 : curve_->gamma(best_t);
    }
  }
  return x;
}

std::vector<Vec> Set::sample_uniform(std::size_t n, std::uint64_t seed) const {
  if (n < 1) throw InvalidArgumentError("sample_uniform: need n >= 1");
  Rng rng(seed ^ 0x5bd1e995u);
  std::vector<Vec> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    switch (kind_) {
      case SetKind::interval: {
        out.push_back(Vec{a_ + (b_ - a_) * rng.uniform()});
        break;
      }
      case SetKind::circle: {
        double t = kTwoPi * rng.uniform();
        out.push_back(Vec{radius_ * std::cos(t), radius_ * std::sin(t)});
        break;
      }
      case SetKind::sphere: {
        Vec g(ambient_dim_);
        double n2 = 0;
        do {
          for (int d = 0; d < ambient_dim_; ++d) g[d] = rng.gaussian();
          n2 = g.norm2();
        } while (n2 < 1e-24);
        out.push_back((1.0 / std::sqrt(n2)) * g);
        break;
      }
      case SetKind::ball: {
        Vec g(ambient_dim_);
        double n2 = 0;
        do {
          for (int d = 0; d < ambient_dim_; ++d) g[d] = rng.gaussian();
          n2 = g.norm2();
        } while (n2 < 1e-24);
        double r = std::pow(rng.uniform(), 1.0 / ambient_dim_);
        out.push_back((r / std::sqrt(n2)) * g);
        break;
      }
      case SetKind::cube: {
        Vec x(ambient_dim_);
        for (int d = 0; d < ambient_dim_; ++d) x[d] = rng.uniform();
        out.push_back(x);
        break;
      }
      case SetKind::curve: {
        double target = rng.uniform() * curve_->total_len;
        const auto& cum = curve_->cum_len;
        auto it = std::upper_bound(cum.begin(), cum.end(), target);
        std::size_t k = std::min<std::size_t>(
            cum.size() - 2, it == cum.begin() ? 0 : (it - cum.begin() - 1));
        double seg = cum[k + 1] - cum[k];
        double frac = seg > 0 ? (target - cum[k]) / seg : 0.0;
        double t = (double(k) + frac) / Set::CurveData::kKnots;
        out.push_back(curve_->gamma(std::clamp(t, 0.0, 1.0)));
        break;
      }
    }
  }
  return out;
}

Box Set::chart_domain() const {
  switch (kind_) {
    case SetKind::interval: return Box{Vec{a_}, Vec{b_}};
    case SetKind::circle: return Box{Vec{0.0}, Vec{kTwoPi}};
    case SetKind::curve: return Box{Vec{0.0}, Vec{1.0}};
    case SetKind::cube: {
      Box b{Vec(ambient_dim_), Vec(ambient_dim_)};
      for (int i = 0; i < ambient_dim_; ++i) b.hi[i] = 1.0;
      return b;
    }
    case SetKind::ball: {
      Box b{Vec(ambient_dim_), Vec(ambient_dim_)};
      for (int i = 0; i < ambient_dim_; ++i) {
        b.lo[i] = -1.0;
        b.hi[i] = 1.0;
      }
      return b;
    }
    case SetKind::sphere: {
      if (ambient_dim_ == 2) return Box{Vec{0.0}, Vec{kTwoPi}};
      if (ambient_dim_ == 3) return Box{Vec{-1.0, 0.0}, Vec{1.0, kTwoPi}};
      throw InvalidArgumentError("sphere chart supported for p <= 3");
    }
  }
  throw InvalidArgumentError("chart_domain: bad kind");
}

Vec Set::chart_to_ambient(const Vec& u) const {
  switch (kind_) {
    case SetKind::interval: return Vec{std::clamp(u[0], a_, b_)};
    case SetKind::circle:
      return Vec{radius_ * std::cos(u[0]), radius_ * std::sin(u[0])};
    case SetKind::curve: return curve_->gamma(std::clamp(u[0], 0.0, 1.0));
    case SetKind::cube:
    case SetKind::ball: {
      Vec x(ambient_dim_);
      for (int i = 0; i < ambient_dim_; ++i) x[i] = u[i];
      if (kind_ == SetKind::ball) return project(x);
      for (int i = 0; i < ambient_dim_; ++i) x[i] = std::clamp(x[i], 0.0, 1.0);
      return x;
    }
    case SetKind::sphere: {
      if (ambient_dim_ == 2) return Vec{std::cos(u[0]), std::sin(u[0])};
      if (ambient_dim_ == 3) {
        double z = std::clamp(u[0], -1.0, 1.0);
        double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        return Vec{rho * std::cos(u[1]), rho * std::sin(u[1]), z};
      }
      throw InvalidArgumentError("sphere chart supported for p <= 3");
    }
  }
  throw InvalidArgumentError("chart_to_ambient: bad kind");
}

Vec Set::ambient_to_chart(const Vec& x) const {
  switch (kind_) {
    case SetKind::interval: return Vec{x[0]};
    case SetKind::circle: return Vec{reduce_angle(std::atan2(x[1], x[0]))};
    case SetKind::curve: {
      // nearest parameter via the projection search
      const int K = 2048;
      double best_t = 0.0, best_d = 1e300;
      for (int i = 0; i <= K; ++i) {
        double t = double(i) / K;
        double d = dist2(curve_->gamma(t), x);
        if (d < best_d) {
          best_d = d;
          best_t = t;
        }
      }
      return Vec{best_t};
    }
    case SetKind::cube:
    case SetKind::ball: {
      Vec u(ambient_dim_);
      for (int i = 0; i < ambient_dim_; ++i) u[i] = x[i];
      return u;
    }
    case SetKind::sphere: {
      if (ambient_dim_ == 2) return Vec{reduce_angle(std::atan2(x[1], x[0]))};
      if (ambient_dim_ == 3)
        return Vec{std::clamp(x[2], -1.0, 1.0),
                   reduce_angle(std::atan2(x[1], x[0]))};
      throw InvalidArgumentError("sphere chart supported for p <= 3");
    }
  }
  throw InvalidArgumentError("ambient_to_chart: bad kind");
}

double Set::chart_box_measure(const Box& b) const {
  switch (kind_) {
    case SetKind::interval: return b.volume();
    case SetKind::circle: return radius_ * b.volume();
    case SetKind::cube: return b.volume();
    case SetKind::curve: {
      auto speed = [this](double t) { return curve_->dgamma(t).norm(); };
      return integrate(speed, b.lo[0], b.hi[0], curve_->rel_tol).value;
    }
    case SetKind::sphere: {
      if (ambient_dim_ == 2) return b.volume();
      if (ambient_dim_ == 3) {
        double z0 = std::clamp(b.lo[0], -1.0, 1.0);
        double z1 = std::clamp(b.hi[0], -1.0, 1.0);
        return std::max(0.0, z1 - z0) * b.width(1);
      }
      throw InvalidArgumentError("sphere chart supported for p <= 3");
    }
    case SetKind::ball:
      throw InvalidArgumentError("chart_box_measure unsupported for balls");
  }
  throw InvalidArgumentError("chart_box_measure: bad kind");
}

double Set::chart_density(const Vec& u) const {
  switch (kind_) {
    case SetKind::interval:
    case SetKind::cube:
      return 1.0;
    case SetKind::circle:
      return radius_;
    case SetKind::curve:
      return curve_->dgamma(std::clamp(u[0], 0.0, 1.0)).norm();
    case SetKind::sphere:
      if (ambient_dim_ <= 3) return 1.0;
      throw InvalidArgumentError("sphere chart supported for p <= 3");
    case SetKind::ball:
      throw InvalidArgumentError("chart_density unsupported for balls");
  }
  throw InvalidArgumentError("chart_density: bad kind");
}

double Set::chart_cell_radius(const Box& b) const {
  switch (kind_) {
    case SetKind::interval: return 0.5 * b.width(0);
    case SetKind::circle: return chord(radius_, 0.5 * radius_ * b.width(0));
    case SetKind::curve: {
      double t0 = b.lo[0], t1 = b.hi[0];
      double vmax = 0.0;
      for (int i = 0; i <= 16; ++i)
        vmax = std::max(vmax, curve_->dgamma(t0 + (t1 - t0) * i / 16.0).norm());
      return 0.5 * (t1 - t0) * vmax * 1.0625;
    }
    case SetKind::cube:
    case SetKind::ball: {
      double s = 0;
      for (int i = 0; i < b.dim(); ++i) s += b.width(i) * b.width(i);
      return 0.5 * std::sqrt(s);
    }
    case SetKind::sphere: {
      if (ambient_dim_ == 2) return chord(1.0, 0.5 * b.width(0));
      if (ambient_dim_ == 3) {
        double z0 = std::clamp(b.lo[0], -1.0, 1.0);
        double z1 = std::clamp(b.hi[0], -1.0, 1.0);
        double zc = 0.5 * (z0 + z1);
        double th0 = std::acos(z1), th1 = std::acos(z0), thc = std::acos(zc);
        double meridian = std::max(thc - th0, th1 - thc);
        double sin_max = std::sqrt(std::max(
            0.0, 1.0 - std::min(z0 * z0, z1 * z1) * (z0 * z1 > 0 ? 1.0 : 0.0)));
        double parallel = 0.5 * b.width(1) * sin_max;
        return chord(1.0, std::min(meridian + parallel, kPi));
      }
      throw InvalidArgumentError("sphere chart supported for p <= 3");
    }
  }
  throw InvalidArgumentError("chart_cell_radius: bad kind");
}

Vec Set::chart_cell_node(const Box& b) const {
  Vec x = chart_to_ambient(b.center());
  return kind_ == SetKind::ball ? project(x) : x;
}

bool Set::chart_cell_alive(const Box& b) const {
  if (kind_ != SetKind::ball) return true;
  Vec c = b.center();
  double excess = c.norm() - 1.0;
  return excess <= chart_cell_radius(b);
}

bool Set::chart_box_counts(const Box& b, const Vec& u) const {
  Vec v = u;
  auto wrap = [&](int axis) {
    double span = v[axis] - b.lo[axis];
    span = std::fmod(span, kTwoPi);
    if (span < 0) span += kTwoPi;
    v[axis] = b.lo[axis] + span;
  };
  if (kind_ == SetKind::circle || (kind_ == SetKind::sphere && ambient_dim_ == 2))
    wrap(0);
  if (kind_ == SetKind::sphere && ambient_dim_ == 3) wrap(1);
  return b.contains(v);
}

Mesh Set::region_mesh(const Region& region, double resolution,
                      std::size_t node_cap) const {
  if (!(resolution > 0))
    throw InvalidArgumentError("mesh: need resolution > 0");
  // coarse node-count estimate before any allocation
  double est = measure_ / std::pow(resolution, hausdorff_dim_);
  if (est > 8.0 * double(node_cap))
    throw ResourceLimitError("mesh: node cap exceeded");
  std::deque<Box> queue{region.box};
  Mesh m;
  m.resolution = resolution;
  while (!queue.empty()) {
    Box cell = queue.front();
    queue.pop_front();
    if (!chart_cell_alive(cell)) continue;
    double r = chart_cell_radius(cell);
    if (r <= resolution) {
      m.nodes.push_back(chart_cell_node(cell));
      m.covering_radius = std::max(m.covering_radius, r);
      if (m.nodes.size() > node_cap)
        throw ResourceLimitError("mesh: node cap exceeded");
      continue;
    }
    // split every axis; guard against resolutions below fp granularity
    if (cell.max_width() < 16.0 * std::numeric_limits<double>::epsilon() *
                               (1.0 + std::fabs(cell.center().norm())))
      throw ResourceLimitError("mesh: resolution below representable width");
    int d = cell.dim();
    int children = 1 << d;
    for (int c = 0; c < children; ++c) {
      Box child = cell;
      for (int i = 0; i < d; ++i) {
        double mid = 0.5 * (cell.lo[i] + cell.hi[i]);
        if (c & (1 << i)) {
          child.lo[i] = mid;
        } else {
          child.hi[i] = mid;
        }
      }
      queue.push_back(child);
    }
    if (queue.size() > 8 * node_cap)
      throw ResourceLimitError("mesh: node cap exceeded");
  }
  return m;
}

Mesh Set::mesh(double resolution, std::size_t node_cap) const {
  if (!(resolution > 0))
    throw InvalidArgumentError("mesh: need resolution > 0");
  Mesh m;
  m.resolution = resolution;
  switch (kind_) {
    case SetKind::interval: {
      std::size_t n = static_cast<std::size_t>(
                          std::ceil((b_ - a_) / resolution)) + 1;
      if (n > node_cap) throw ResourceLimitError("mesh: node cap exceeded");
      double spacing = (b_ - a_) / double(n - 1);
      for (std::size_t i = 0; i < n; ++i)
        m.nodes.push_back(Vec{a_ + spacing * double(i)});
      m.covering_radius = 0.5 * spacing;
      return m;
    }
    case SetKind::circle: {
      std::size_t n = std::max<std::size_t>(
          3, static_cast<std::size_t>(std::ceil(kTwoPi * radius_ / resolution)));
      if (n > node_cap) throw ResourceLimitError("mesh: node cap exceeded");
      for (std::size_t i = 0; i < n; ++i) {
        double t = kTwoPi * double(i) / double(n);
        m.nodes.push_back(Vec{radius_ * std::cos(t), radius_ * std::sin(t)});
      }
      m.covering_radius = chord(radius_, kPi * radius_ / double(n));
      return m;
    }
    default:
      return region_mesh(full_region(), resolution, node_cap);
  }
}

double hausdorff_measure(const Set& s) { return s.measure(); }

}  // namespace chebpol
