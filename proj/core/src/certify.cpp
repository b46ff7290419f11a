#include "chebpol/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "chebpol/errors.hpp"
#include "chebpol/parallel.hpp"

namespace chebpol {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Cell {
  Box box;
  Vec node;
  double radius = 0.0;
  double value = 0.0;
  double lower = -kInf;
  bool active = true;
};

// (lower, index) min-heap entries; index ties keep refinement deterministic
struct HeapEntry {
  double lower;
  std::size_t index;
  bool operator>(const HeapEntry& o) const {
    if (lower != o.lower) return lower > o.lower;
    return index > o.index;
  }
};

std::vector<Box> subdivide(const Box& b) {
  int d = b.dim();
  std::vector<Box> out;
  out.reserve(std::size_t(1) << d);
  for (int c = 0; c < (1 << d); ++c) {
    Box child = b;
    for (int i = 0; i < d; ++i) {
      double mid = 0.5 * (b.lo[i] + b.hi[i]);
      if (c & (1 << i))
        child.lo[i] = mid;
      else
        child.hi[i] = mid;
    }
    out.push_back(child);
  }
  return out;
}

bool splittable(const Box& b) {
  for (int i = 0; i < b.dim(); ++i) {
    double mid = 0.5 * (b.lo[i] + b.hi[i]);
    if (mid > b.lo[i] && mid < b.hi[i]) return true;
  }
  return false;
}

}  // namespace

CertifiedBracket certified_min(const Set& set, const Region& region,
                               const CertifiedObjective& objective,
                               const CertifyOptions& options) {
  const int d = region.box.dim();
  int per_axis = options.initial_cells_per_axis;
  if (per_axis <= 0) {
    per_axis = 64;
    while (std::pow(per_axis, d) > 80.0 && per_axis > 2) per_axis /= 2;
  }

  std::vector<Cell> cells;
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>> heap;
  CertifiedBracket out;
  out.upper = kInf;
  out.witness = Vec(set.ambient_dim());

  auto add_cells = [&](const std::vector<Box>& boxes) {
    std::vector<Cell> fresh(boxes.size());
    parallel_for(boxes.size(), [&](std::size_t i) {
      Cell& c = fresh[i];
      c.box = boxes[i];
      c.active = set.chart_cell_alive(c.box);
      if (!c.active) return;
      c.node = set.chart_cell_node(c.box);
      c.radius = set.chart_cell_radius(c.box);
      c.value = objective.value(c.node);
      c.lower = objective.cell_lower(c.value, c.node, c.box, c.radius);
    });
    for (const Cell& c : fresh) {
      if (!c.active) continue;
      out.evaluations += 1;
      if (c.value < out.upper) {
        out.upper = c.value;
        out.witness = c.node;
        out.witness_radius = c.radius;
      }
      cells.push_back(c);
      heap.push({c.lower, cells.size() - 1});
    }
  };

  // initial grid
  {
    std::vector<Box> init;
    std::vector<Box> stack{region.box};
    for (int axis = 0; axis < d; ++axis) {
      std::vector<Box> next;
      for (const Box& b : stack) {
        double w = b.width(axis) / per_axis;
        for (int k = 0; k < per_axis; ++k) {
          Box piece = b;
          piece.lo[axis] = b.lo[axis] + k * w;
          piece.hi[axis] = k + 1 == per_axis ? b.hi[axis] : b.lo[axis] + (k + 1) * w;
          next.push_back(piece);
        }
      }
      stack = std::move(next);
    }
    add_cells(stack);
  }

  auto current_lower = [&]() {
    // min over active cells; heap top may reference stale (split) cells
    while (!heap.empty() && !cells[heap.top().index].active) heap.pop();
    return heap.empty() ? out.upper : std::min(heap.top().lower, out.upper);
  };

  auto gap_ok = [&](double lower) {
    double gap = out.upper - lower;
    if (options.target_gap_abs > 0 && gap <= options.target_gap_abs) return true;
    if (options.target_gap_rel > 0 &&
        gap <= options.target_gap_rel * std::max(std::fabs(out.upper), 1e-300))
      return true;
    return false;
  };

  for (out.rounds = 0; out.rounds < options.max_rounds; ++out.rounds) {
    double lower = current_lower();
    if (gap_ok(lower)) {
      out.lower = lower;
      return out;
    }
    if (out.evaluations >= options.max_evaluations) break;

    // pop the weakest cells and split them
    std::vector<std::size_t> victims;
    while (static_cast<int>(victims.size()) < options.refine_per_round &&
           !heap.empty()) {
      auto top = heap.top();
      heap.pop();
      if (!cells[top.index].active) continue;
      if (gap_ok(top.lower)) {
        // this cell (and all weaker ones) already meets the gap; put it back
        heap.push(top);
        break;
      }
      victims.push_back(top.index);
    }
    if (victims.empty()) break;

    std::vector<Box> children;
    bool stuck = false;
    for (std::size_t vi : victims) {
      if (!splittable(cells[vi].box)) {
        stuck = true;
        heap.push({cells[vi].lower, vi});
        continue;
      }
      cells[vi].active = false;
      auto kids = subdivide(cells[vi].box);
      children.insert(children.end(), kids.begin(), kids.end());
    }
    if (children.empty()) {
      if (stuck) break;
      continue;
    }
    add_cells(children);
  }

  out.lower = current_lower();
  out.budget_exhausted = !gap_ok(out.lower);
  return out;
}

CertifiedMaxBracket certified_max_lip1(const Set& set, const Region& region,
                                       const std::function<double(const Vec&)>& f,
                                       const CertifyOptions& options) {
  CertifiedObjective obj;
  obj.value = [&f](const Vec& x) { return -f(x); };
  obj.cell_lower = [](double v, const Vec&, const Box&, double radius) {
    return v - radius;
  };
  CertifiedBracket b = certified_min(set, region, obj, options);
  CertifiedMaxBracket out;
  out.lower = -b.upper;
  out.upper = -b.lower;
  out.witness = b.witness;
  out.evaluations = b.evaluations;
  out.rounds = b.rounds;
  out.budget_exhausted = b.budget_exhausted;
  return out;
}

}  // namespace chebpol
