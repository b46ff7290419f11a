#include "chebpol/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chebpol/errors.hpp"
#include "chebpol/quadrature.hpp"

namespace chebpol {

namespace {

double diag_density(const Set& set, const WeightSpec* w, double s, const Vec& u) {
  if (!w) return 1.0;
  Vec x = set.chart_to_ambient(u);
  double v = w->diagonal(x);
  return std::pow(v, -double(set.hausdorff_dim()) / s);
}

// quadrature of the diagonal density against H_d through the chart
double integrate_chart(const Set& set, const WeightSpec* w, double s,
                       const Box& box, double rel_tol) {
  int d = box.dim();
  if (d == 1) {
    auto f = [&](double t) {
      Vec u{t};
      return diag_density(set, w, s, u) * set.chart_density(u);
    };
    return integrate(f, box.lo[0], box.hi[0], rel_tol).value;
  }
  if (d == 2) {
    auto outer = [&](double t0) {
      auto inner = [&](double t1) {
        Vec u{t0, t1};
        return diag_density(set, w, s, u) * set.chart_density(u);
      };
      return integrate(inner, box.lo[1], box.hi[1], rel_tol).value;
    };
    return integrate(outer, box.lo[0], box.hi[0], rel_tol).value;
  }
  throw InvalidArgumentError("weighted_hausdorff: chart dimension unsupported");
}

}  // namespace

double weighted_hausdorff(const Set& set, const WeightSpec& weight, double s,
                          const Region& region, double rel_tol) {
  if (!(s >= set.hausdorff_dim()))
    throw InvalidArgumentError("weighted_hausdorff: need s >= d");
  switch (set.kind()) {
    case SetKind::interval:
    case SetKind::circle:
    case SetKind::curve:
      return integrate_chart(set, &weight, s, region.box, rel_tol);
    case SetKind::cube:
      if (set.ambient_dim() <= 2)
        return integrate_chart(set, &weight, s, region.box, rel_tol);
      break;
    case SetKind::sphere:
      if (set.ambient_dim() == 2)
        return integrate_chart(set, &weight, s, region.box, rel_tol);
      if (set.ambient_dim() == 3)
        return integrate_chart(set, &weight, s, region.box, rel_tol);
      break;
    case SetKind::ball:
      break;
  }
  throw InvalidArgumentError("weighted_hausdorff: unsupported set kind");
}

double weighted_hausdorff(const Set& set, const WeightSpec& weight, double s,
                          double rel_tol) {
  return weighted_hausdorff(set, weight, s, set.full_region(), rel_tol);
}

std::vector<Region> make_partition(const Set& set,
                                   const std::vector<int>& bins_per_axis) {
  Box dom = set.chart_domain();
  if (static_cast<int>(bins_per_axis.size()) != dom.dim())
    throw InvalidArgumentError("make_partition: need one bin count per axis");
  std::vector<Box> boxes{dom};
  for (int axis = 0; axis < dom.dim(); ++axis) {
    int k = bins_per_axis[axis];
    if (k < 1) throw InvalidArgumentError("make_partition: bins must be >= 1");
    std::vector<Box> next;
    next.reserve(boxes.size() * k);
    for (const Box& b : boxes) {
      double w = b.width(axis) / k;
      for (int i = 0; i < k; ++i) {
        Box piece = b;
        piece.lo[axis] = b.lo[axis] + i * w;
        piece.hi[axis] = i + 1 == k ? b.hi[axis] : b.lo[axis] + (i + 1) * w;
        next.push_back(piece);
      }
    }
    boxes = std::move(next);
  }
  std::vector<Region> out;
  out.reserve(boxes.size());
  for (const Box& b : boxes) out.push_back(Region{b});
  return out;
}

std::vector<std::size_t> empirical_counts(const Configuration& config,
                                          const std::vector<Region>& partition) {
  if (partition.empty()) throw InvalidArgumentError("empirical_counts: no regions");
  const Set& set = config.set();
  std::vector<std::size_t> counts(partition.size(), 0);
  for (const Vec& x : config.points()) {
    Vec u = set.ambient_to_chart(x);
    bool assigned = false;
    for (std::size_t r = 0; r < partition.size(); ++r) {
      if (set.chart_box_counts(partition[r].box, u)) {
        ++counts[r];
        assigned = true;
        break;
      }
    }
    if (!assigned) {
      // top-boundary point on a non-periodic axis: assign to the nearest bin
      std::size_t best = 0;
      double bestd = std::numeric_limits<double>::infinity();
      for (std::size_t r = 0; r < partition.size(); ++r) {
        double d = dist(partition[r].box.center(), u);
        if (d < bestd) {
          bestd = d;
          best = r;
        }
      }
      ++counts[best];
    }
  }
  return counts;
}

double cdf_sup_distance(const Configuration& config, const WeightSpec* weight,
                        double s) {
  const Set& set = config.set();
  if (set.chart_dim() != 1)
    throw InvalidArgumentError("cdf_sup_distance: needs a 1-d set");
  Box dom = set.chart_domain();

  std::vector<double> ts;
  ts.reserve(config.size());
  for (const Vec& x : config.points())
    ts.push_back(set.ambient_to_chart(x)[0]);
  std::sort(ts.begin(), ts.end());

  // predicted CDF at the sorted sample coordinates, by cumulative quadrature
  double total = integrate_chart(set, weight, s, dom, 1e-9);
  std::vector<double> cdf(ts.size());
  double acc = 0.0, prev = dom.lo[0];
  for (std::size_t i = 0; i < ts.size(); ++i) {
    Box seg = dom;
    seg.lo[0] = prev;
    seg.hi[0] = std::max(prev, std::min(ts[i], dom.hi[0]));
    acc += integrate_chart(set, weight, s, seg, 1e-9);
    cdf[i] = acc / total;
    prev = seg.hi[0];
  }

  double dmax = 0.0;
  const double n = double(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    dmax = std::max(dmax, std::fabs(cdf[i] - double(i) / n));
    dmax = std::max(dmax, std::fabs(cdf[i] - double(i + 1) / n));
  }
  return dmax;
}

DistributionReport compare_distribution(const std::vector<Configuration>& configs,
                                        const WeightSpec* weight, double s,
                                        int bins_per_axis, double tolerance,
                                        bool kernel_is_log) {
  if (configs.empty())
    throw InvalidArgumentError("compare_distribution: no configurations");
  const Set& set = configs.front().set();
  DistributionReport rep;
  rep.tolerance = tolerance;
  rep.out_of_theorem = kernel_is_log || s < set.hausdorff_dim();
  if (rep.out_of_theorem)
    rep.note = "outside the s >= d theorem hypotheses; report only";

  // bin table (shared partition, predicted fractions); outside the theorem
  // the comparison target falls back to the unweighted law
  std::vector<int> bins(set.chart_dim(), bins_per_axis);
  auto partition = make_partition(set, bins);
  WeightSpec unit = WeightSpec::constant(1.0);
  const WeightSpec& w = (weight && !rep.out_of_theorem) ? *weight : unit;
  const WeightSpec* w_cdf = rep.out_of_theorem ? nullptr : weight;
  double s_eff = std::max(s, double(set.hausdorff_dim()));
  double total = weighted_hausdorff(set, w, s_eff);
  rep.bins.resize(partition.size());
  for (std::size_t r = 0; r < partition.size(); ++r)
    rep.bins[r].predicted_fraction =
        weighted_hausdorff(set, w, s_eff, partition[r]) / total;

  for (const Configuration& cfg : configs) {
    auto counts = empirical_counts(cfg, partition);
    for (std::size_t r = 0; r < partition.size(); ++r)
      rep.bins[r].counts.push_back(counts[r]);

    DistributionReport::Row row;
    row.n = cfg.size();
    if (set.chart_dim() == 1) {
      row.discrepancy = cdf_sup_distance(cfg, w_cdf, s_eff);
    } else {
      // max relative bin error over bins with predicted mass >= 5/N;
      // undersized bins are pooled into one side bin
      double err = 0.0, pooled_pred = 0.0;
      std::size_t pooled_count = 0;
      bool merged = false;
      for (std::size_t r = 0; r < partition.size(); ++r) {
        double pred = rep.bins[r].predicted_fraction;
        if (pred * double(cfg.size()) < 5.0) {
          pooled_pred += pred;
          pooled_count += counts[r];
          merged = true;
          continue;
        }
        double emp = double(counts[r]) / double(cfg.size());
        err = std::max(err, std::fabs(emp - pred) / pred);
      }
      if (pooled_pred * double(cfg.size()) >= 5.0) {
        double emp = double(pooled_count) / double(cfg.size());
        err = std::max(err, std::fabs(emp - pooled_pred) / pooled_pred);
      }
      if (merged) rep.note = "undersized bins merged";
      row.discrepancy = err;
    }
    rep.rows.push_back(row);
  }

  rep.decreasing = true;
  for (std::size_t i = 1; i < rep.rows.size(); ++i)
    rep.decreasing &= rep.rows[i].discrepancy <= rep.rows[i - 1].discrepancy;
  rep.within_tolerance = rep.rows.back().discrepancy <= tolerance;
  rep.pass = rep.out_of_theorem || (rep.within_tolerance && rep.decreasing);
  return rep;
}

}  // namespace chebpol
