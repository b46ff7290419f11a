#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

namespace chebpol {

/// Small fixed-capacity ambient-space vector. All supported sets live in
/// R^p with p <= kMaxDim; dimension is a runtime value.
class Vec {
 public:
  static constexpr int kMaxDim = 8;

  Vec() : dim_(0) { c_.fill(0.0); }
  explicit Vec(int dim) : dim_(dim) { c_.fill(0.0); }
  Vec(std::initializer_list<double> xs) : dim_(static_cast<int>(xs.size())) {
    c_.fill(0.0);
    int i = 0;
    for (double x : xs) c_[i++] = x;
  }

  int dim() const { return dim_; }
  double operator[](int i) const { return c_[i]; }
  double& operator[](int i) { return c_[i]; }
  const double* data() const { return c_.data(); }

  Vec& operator+=(const Vec& o) {
    for (int i = 0; i < dim_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    for (int i = 0; i < dim_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Vec& operator*=(double a) {
    for (int i = 0; i < dim_; ++i) c_[i] *= a;
    return *this;
  }

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(double a, Vec v) { return v *= a; }
  friend Vec operator*(Vec v, double a) { return v *= a; }

  friend bool operator==(const Vec& a, const Vec& b) {
    if (a.dim_ != b.dim_) return false;
    for (int i = 0; i < a.dim_; ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }

  double dot(const Vec& o) const {
    double s = 0;
    for (int i = 0; i < dim_; ++i) s += c_[i] * o.c_[i];
    return s;
  }
  double norm2() const { return dot(*this); }
  double norm() const { return std::sqrt(norm2()); }

  std::string str() const;

 private:
  std::array<double, kMaxDim> c_;
  int dim_;
};

inline double dist2(const Vec& a, const Vec& b) {
  double s = 0;
  for (int i = 0; i < a.dim(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

inline double dist(const Vec& a, const Vec& b) { return std::sqrt(dist2(a, b)); }

/// Axis-aligned box in chart coordinates (up to kMaxDim axes used).
struct Box {
  Vec lo, hi;

  int dim() const { return lo.dim(); }
  Vec center() const {
    Vec c(lo.dim());
    for (int i = 0; i < lo.dim(); ++i) c[i] = 0.5 * (lo[i] + hi[i]);
    return c;
  }
  double width(int i) const { return hi[i] - lo[i]; }
  double max_width() const {
    double w = 0;
    for (int i = 0; i < dim(); ++i) w = std::max(w, width(i));
    return w;
  }
  double volume() const {
    double v = 1;
    for (int i = 0; i < dim(); ++i) v *= width(i);
    return v;
  }
  bool contains(const Vec& u) const {
    for (int i = 0; i < dim(); ++i)
      if (u[i] < lo[i] || u[i] >= hi[i]) return false;
    return true;
  }
  // closed membership, for domain checks rather than half-open bin counting
  bool contains_closed(const Vec& u, double tol = 0.0) const {
    for (int i = 0; i < dim(); ++i)
      if (u[i] < lo[i] - tol || u[i] > hi[i] + tol) return false;
    return true;
  }
};

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kTwoPi = 2.0 * kPi;

}  // namespace chebpol
