#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "chebpol/geom.hpp"

namespace chebpol {

enum class SetKind { interval, circle, sphere, ball, cube, curve };

std::string to_string(SetKind k);

/// Finite node set covering a compact set: every point of the set lies
/// within covering_radius of some node.
struct Mesh {
  std::vector<Vec> nodes;
  double covering_radius = 0.0;
  double resolution = 0.0;
};

class Set;

/// Chart-box subset of a set (an arc of a circle, a sub-interval, a
/// parameter range of a curve, a box of a cube, a z/azimuth box of a
/// sphere). The whole set is the chart domain itself.
struct Region {
  Box box;
};

/// A compact set A in R^p with closed-form d-dimensional Hausdorff measure,
/// projection, uniform sampling, and certified meshing through a chart.
class Set {
 public:
  static Set interval(double a, double b);
  static Set circle(double radius = 1.0);
  static Set sphere(int ambient_dim);  // unit S^{p-1} in R^p
  static Set ball(int ambient_dim);    // unit closed ball B^p
  static Set cube(int ambient_dim);    // unit cube [0,1]^p
  static Set curve(std::function<Vec(double)> gamma,
                   std::function<Vec(double)> dgamma, int ambient_dim,
                   double arclength_rel_tol = 1e-10);

  SetKind kind() const { return kind_; }
  int ambient_dim() const { return ambient_dim_; }
  int hausdorff_dim() const { return hausdorff_dim_; }
  double measure() const { return measure_; }
  double diameter() const { return diameter_; }
  std::string describe() const;

  bool contains(const Vec& x, double tol) const;
  /// Nearest point of the set; ties resolved deterministically
  /// (lexicographically smallest coordinate vector).
  Vec project(const Vec& x) const;

  /// n points independently distributed per normalized H_d, deterministic
  /// in (seed, n) and independent of the thread cap.
  std::vector<Vec> sample_uniform(std::size_t n, std::uint64_t seed) const;

  /// Mesh with covering radius <= resolution. Throws ResourceLimitError if
  /// the node count would exceed node_cap.
  Mesh mesh(double resolution, std::size_t node_cap = kDefaultNodeCap) const;
  Mesh region_mesh(const Region& region, double resolution,
                   std::size_t node_cap = kDefaultNodeCap) const;

  // --- chart interface -------------------------------------------------
  int chart_dim() const { return hausdorff_dim_; }
  Box chart_domain() const;
  Region full_region() const { return Region{chart_domain()}; }
  Vec chart_to_ambient(const Vec& u) const;
  /// Chart coordinates of a point of the set (angles reduced to [0, 2pi)).
  Vec ambient_to_chart(const Vec& x) const;
  /// H_d of the image of a chart box (closed form where available,
  /// quadrature for curves). Unsupported for balls.
  double chart_box_measure(const Box& b) const;
  /// dH_d / du at a chart point (1 for identity and area-true charts,
  /// r for circles, |gamma'| for curves). Unsupported for balls.
  double chart_density(const Vec& u) const;
  /// Certified ambient covering radius of the cell around its node.
  double chart_cell_radius(const Box& b) const;
  /// Node representing a chart cell (projected center).
  Vec chart_cell_node(const Box& b) const;
  /// False when the cell provably misses the set (ball corners).
  bool chart_cell_alive(const Box& b) const;

  /// Whether a chart point u (reduced for periodic axes) lies in the
  /// half-open box [lo, hi), the counting convention for partitions.
  bool chart_box_counts(const Box& b, const Vec& u) const;

  static constexpr std::size_t kDefaultNodeCap = std::size_t(1) << 22;

 private:
  Set() = default;

  SetKind kind_{};
  int ambient_dim_ = 0;
  int hausdorff_dim_ = 0;
  double measure_ = 0.0;
  double diameter_ = 0.0;
  double a_ = 0.0, b_ = 0.0;  // interval endpoints
  double radius_ = 1.0;       // circle radius

  struct CurveData;
  std::shared_ptr<const CurveData> curve_;
};

/// Closed-form H_d(A); adaptive-quadrature arclength for curves.
double hausdorff_measure(const Set& s);

}  // namespace chebpol
