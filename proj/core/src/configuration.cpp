#include "chebpol/configuration.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <unordered_map>

#include "chebpol/errors.hpp"

namespace chebpol {

Configuration::Configuration(Set set, std::vector<Vec> points)
    : set_(std::move(set)), points_(std::move(points)) {
  if (points_.empty())
    throw InvalidArgumentError("configuration: need at least one point");
  double tol = membership_tol(set_);
  for (const Vec& x : points_) {
    if (x.dim() != set_.ambient_dim())
      throw InvalidArgumentError("configuration: wrong point dimension");
    if (!set_.contains(x, tol))
      throw InvalidArgumentError("configuration: point off the set: " + x.str());
  }
}

Configuration Configuration::with_point(const Vec& x) const {
  auto pts = points_;
  pts.push_back(x);
  return Configuration(set_, std::move(pts));
}

Configuration Configuration::with_point_replaced(std::size_t i, const Vec& x) const {
  auto pts = points_;
  pts.at(i) = x;
  return Configuration(set_, std::move(pts));
}

namespace {

struct HashGrid {
  const std::vector<Vec>& pts;
  double cell = 1.0;
  std::unordered_map<std::uint64_t, std::vector<int>> buckets;

  static std::uint64_t key(const Vec& x, double cell, int dim) {
    std::uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < dim; ++i) {
      auto q = static_cast<std::int64_t>(std::floor(x[i] / cell));
      h ^= static_cast<std::uint64_t>(q) + 0x9e3779b97f4a7c15ull + (h << 6) +
           (h >> 2);
    }
    return h;
  }

  explicit HashGrid(const std::vector<Vec>& p, double cell_size)
      : pts(p), cell(cell_size) {
    buckets.reserve(2 * p.size());
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
      buckets[key(p[i], cell, p[i].dim())].push_back(i);
  }
};

// exact nearest distance by expanding cube rings around y's cell; cells at
// Chebyshev ring k hold points no closer than (k-1)*cell
double grid_nearest(const HashGrid& g, const Vec& y, int skip_index) {
  const int dim = y.dim();
  const int max_ring = 256;
  double best = std::numeric_limits<double>::infinity();
  std::array<std::int64_t, Vec::kMaxDim> base{};
  for (int i = 0; i < dim; ++i)
    base[i] = static_cast<std::int64_t>(std::floor(y[i] / g.cell));
  std::array<std::int64_t, Vec::kMaxDim> off{};
  for (int ring = 0; ring <= max_ring; ++ring) {
    if (ring > 0 && best <= g.cell * (ring - 1)) return best;
    std::function<void(int, bool)> rec = [&](int axis, bool boundary) {
      if (axis == dim) {
        if (ring > 0 && !boundary) return;
        std::uint64_t h = 1469598103934665603ull;
        for (int i = 0; i < dim; ++i) {
          std::uint64_t q = static_cast<std::uint64_t>(base[i] + off[i]);
          h ^= q + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        auto it = g.buckets.find(h);
        if (it == g.buckets.end()) return;
        for (int idx : it->second) {
          if (idx == skip_index) continue;
          best = std::min(best, dist(y, g.pts[idx]));
        }
        return;
      }
      for (std::int64_t o = -ring; o <= ring; ++o) {
        off[axis] = o;
        rec(axis + 1, boundary || std::llabs(o) == ring);
      }
    };
    rec(0, false);
  }
  // ring cap hit without a proof of optimality: fall back to a full scan
  for (int i = 0; i < static_cast<int>(g.pts.size()); ++i) {
    if (i == skip_index) continue;
    best = std::min(best, dist(y, g.pts[i]));
  }
  return best;
}

}  // namespace

GridIndex::GridIndex(const std::vector<Vec>& pts) : pts_(pts) {}

double GridIndex::nearest_distance(const Vec& y) const {
  double best = std::numeric_limits<double>::infinity();
  for (const Vec& p : pts_) best = std::min(best, dist(y, p));
  return best;
}

double GridIndex::min_pairwise_distance() const {
  const std::size_t n = pts_.size();
  if (n < 2) return std::numeric_limits<double>::infinity();
  if (n <= 2048) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        best = std::min(best, dist(pts_[i], pts_[j]));
    return best;
  }
  // coarse cell size from the bounding box, then per-point ring search
  Vec lo = pts_[0], hi = pts_[0];
  for (const Vec& p : pts_)
    for (int d = 0; d < p.dim(); ++d) {
      lo[d] = std::min(lo[d], p[d]);
      hi[d] = std::max(hi[d], p[d]);
    }
  double extent = std::max(dist(lo, hi), 1e-30);
  double cell = extent / std::max(4.0, std::pow(double(n), 1.0 / pts_[0].dim()));
  HashGrid g(pts_, cell);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i)
    best = std::min(best, grid_nearest(g, pts_[i], static_cast<int>(i)));
  return best;
}

double GridIndex::median_nn_distance() const {
  const std::size_t n = pts_.size();
  if (n < 2) return 0.0;
  std::vector<double> nn(n);
  if (n <= 2048) {
    for (std::size_t i = 0; i < n; ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) best = std::min(best, dist(pts_[i], pts_[j]));
      nn[i] = best;
    }
  } else {
    Vec lo = pts_[0], hi = pts_[0];
    for (const Vec& p : pts_)
      for (int d = 0; d < p.dim(); ++d) {
        lo[d] = std::min(lo[d], p[d]);
        hi[d] = std::max(hi[d], p[d]);
      }
    double extent = std::max(dist(lo, hi), 1e-30);
    double cell = extent / std::max(4.0, std::pow(double(n), 1.0 / pts_[0].dim()));
    HashGrid g(pts_, cell);
    for (std::size_t i = 0; i < n; ++i)
      nn[i] = grid_nearest(g, pts_[i], static_cast<int>(i));
  }
  std::nth_element(nn.begin(), nn.begin() + n / 2, nn.end());
  return nn[n / 2];
}

}  // namespace chebpol
