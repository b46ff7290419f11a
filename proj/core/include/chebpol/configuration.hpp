#pragma once

#include <vector>

#include "chebpol/geom.hpp"
#include "chebpol/set.hpp"

namespace chebpol {

/// An N-point multiset on a set. Points are kept in insertion order and
/// duplicates are allowed; every point must pass the membership test within
/// the projection tolerance.
class Configuration {
 public:
  Configuration(Set set, std::vector<Vec> points);

  const Set& set() const { return set_; }
  std::size_t size() const { return points_.size(); }
  const Vec& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Vec>& points() const { return points_; }

  Configuration with_point(const Vec& x) const;
  Configuration with_point_replaced(std::size_t i, const Vec& x) const;

  /// Membership tolerance used at construction: 1e-9 * diam(A).
  static double membership_tol(const Set& s) { return 1e-9 * s.diameter(); }

 private:
  Set set_;
  std::vector<Vec> points_;
};

/// Uniform grid hash over the bounding box of a point cloud; cell size
/// defaults to the median nearest-neighbor spacing. Supports exact nearest
/// distance queries and exact minimal pairwise distance.
class GridIndex {
 public:
  explicit GridIndex(const std::vector<Vec>& pts);

  /// Exact distance from y to the nearest indexed point (inf when empty).
  double nearest_distance(const Vec& y) const;

  /// Exact min_{i != j} |x_i - x_j| (0 for duplicates).
  double min_pairwise_distance() const;

  /// Median nearest-neighbor distance of the cloud.
  double median_nn_distance() const;

 private:
  std::vector<Vec> pts_;
};

}  // namespace chebpol
