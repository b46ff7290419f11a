#include "chebpol/potential.hpp"

#include <cmath>
#include <limits>

#include "chebpol/detail/inv_pow.hpp"
#include "chebpol/errors.hpp"
#include "chebpol/parallel.hpp"

namespace chebpol {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using detail::InvPow;

}  // namespace

double potential_at(const Vec& y, const Configuration& config,
                    const Kernel& kernel) {
  return kernel.potential_sum(y, config.points());
}

std::pair<double, std::size_t> mesh_min_potential(const std::vector<Vec>& nodes,
                                                  const Configuration& config,
                                                  const Kernel& kernel) {
  if (nodes.empty()) throw InvalidArgumentError("mesh_min_potential: no nodes");
  std::vector<double> vals(nodes.size());
  parallel_for(nodes.size(), [&](std::size_t i) {
    vals[i] = potential_at(nodes[i], config, kernel);
  });
  std::size_t arg = 0;
  for (std::size_t i = 1; i < nodes.size(); ++i)
    if (vals[i] < vals[arg]) arg = i;
  return {vals[arg], arg};
}

namespace {

// signed chart-derivative interval for 1-d charts (identity charts and
// circles); retains the left/right cancellation that symmetric Lipschitz
// bounds lose at basin bottoms, which makes the bottom-cell slack second
// order in the cell width
struct SignedChartBound {
  enum class Mode { none, identity, angular };
  Mode mode = Mode::none;
  double radius = 1.0;           // circle radius for angular charts
  std::vector<double> coords;    // source chart coordinates

  SignedChartBound(const Set& set, const std::vector<Vec>& pts) {
    switch (set.kind()) {
      case SetKind::interval:
        mode = Mode::identity;
        break;
      case SetKind::circle:
        mode = Mode::angular;
        radius = set.measure() / kTwoPi;
        break;
      case SetKind::sphere:
        if (set.ambient_dim() == 2) mode = Mode::angular;
        break;
      default:
        return;
    }
    coords.reserve(pts.size());
    for (const Vec& x : pts) coords.push_back(set.ambient_to_chart(x)[0]);
  }

  // bound on sup-inf of U over the cell via an interval on dU/du; false when
  // a source lies inside (or touches) the cell
  bool slack(const Kernel& kernel, const Box& cell, double& out) const {
    const double lo = cell.lo[0], hi = cell.hi[0];
    const double c = 0.5 * (lo + hi), ha = 0.5 * (hi - lo);
    const bool is_log = kernel.kind() == KernelKind::log;
    const double s = kernel.s();
    const double w_lo = kernel.weight() ? kernel.weight()->w_inf : 1.0;
    const double w_hi = kernel.weight_max();
    const double lw = kernel.weight_lip();
    InvPow rs(is_log ? 1.0 : s);
    InvPow rs1(is_log ? 1.0 : s + 1.0);
    double glo = 0.0, ghi = 0.0;
    for (double src : coords) {
      double sgn, dmin, dmax;           // distance range over the cell
      double jac_lo = 1.0, jac_hi = 1.0;  // d(dist)/du range magnitude
      if (mode == Mode::identity) {
        double delta = c - src;
        if (std::fabs(delta) <= ha) return false;
        sgn = delta > 0 ? 1.0 : -1.0;
        dmin = std::fabs(delta) - ha;
        dmax = std::fabs(delta) + ha;
      } else {
        double delta = std::remainder(c - src, kTwoPi);  // in (-pi, pi]
        double abs_d = std::fabs(delta);
        if (abs_d <= ha) return false;
        sgn = delta > 0 ? 1.0 : -1.0;
        double amin = abs_d - ha;
        double amax = std::min(abs_d + ha, kPi);
        dmin = 2.0 * radius * std::sin(0.5 * amin);
        dmax = 2.0 * radius * std::sin(0.5 * amax);
        jac_hi = radius * std::cos(0.5 * amin);
        jac_lo = std::max(0.0, radius * std::cos(0.5 * amax));
        if (abs_d + ha >= kPi) {
          // cell straddles the antipode: derivative sign flips there
          double m = is_log ? jac_hi / dmin : s * w_hi * jac_hi * rs1(dmin);
          glo -= m;
          ghi += m;
          if (lw > 0) {
            double t = lw * radius * rs(dmin);
            glo -= t;
            ghi += t;
          }
          continue;
        }
      }
      double m_lo, m_hi;
      if (is_log) {
        m_lo = jac_lo / dmax;
        m_hi = jac_hi / dmin;
      } else {
        m_lo = s * w_lo * jac_lo * rs1(dmax);
        m_hi = s * w_hi * jac_hi * rs1(dmin);
      }
      // dU_j/du = -sgn * m with m in [m_lo, m_hi]
      if (sgn > 0) {
        glo -= m_hi;
        ghi -= m_lo;
      } else {
        glo += m_lo;
        ghi += m_hi;
      }
      if (lw > 0) {
        double scale = mode == Mode::angular ? radius : 1.0;
        double t = lw * scale * rs(dmin);
        glo -= t;
        ghi += t;
      }
    }
    out = ha * std::max(std::fabs(glo), std::fabs(ghi));
    return true;
  }
};

}  // namespace

PolarizationEstimate polarization(const Configuration& config,
                                  const Region& region, const Kernel& kernel,
                                  const PolarizationOptions& options) {
  const auto& pts = config.points();
  const std::size_t n = pts.size();
  const double w_max = kernel.weight_max();
  const double w_lip = kernel.weight_lip();
  // global lower bound of the weight over off-diagonal pairs; 1 when unweighted
  const double w_inf = kernel.weight() ? kernel.weight()->w_inf : 1.0;
  const bool is_log = kernel.kind() == KernelKind::log;
  const double s = kernel.s();
  InvPow rs(is_log ? 1.0 : s);
  InvPow rs1(is_log ? 1.0 : s + 1.0);
  SignedChartBound signed_bound(config.set(), pts);

  CertifiedObjective obj;
  obj.value = [&](const Vec& y) { return potential_at(y, config, kernel); };
  obj.cell_lower = [&](double v, const Vec& node, const Box& cell, double h) {
    // route 1: node value minus radius * sum of per-source gradient bounds
    // route 2: sum of worst-case terms at distance d_j + h
    // route 3: signed chart-derivative interval (1-d charts)
    double grad_bound = 0.0;
    bool grad_ok = std::isfinite(v);
    double floor_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double d = dist(node, pts[j]);
      if (is_log) {
        floor_sum += -std::log(d + h);
        double r = d - h;
        if (r <= 0.0)
          grad_ok = false;
        else if (grad_ok)
          grad_bound += 1.0 / r;
      } else {
        floor_sum += w_inf * rs(d + h);
        double r = d - h;
        if (r <= 0.0)
          grad_ok = false;
        else if (grad_ok)
          grad_bound += w_max * s * rs1(r) + w_lip * rs(r);
      }
    }
    double lower = floor_sum;
    if (grad_ok) lower = std::max(lower, v - h * grad_bound);
    if (signed_bound.mode != SignedChartBound::Mode::none && std::isfinite(v)) {
      double slack = 0.0;
      if (signed_bound.slack(kernel, cell, slack))
        lower = std::max(lower, v - slack);
    }
    return lower;
  };

  CertifiedBracket b = certified_min(config.set(), region, obj, options.certify());
  PolarizationEstimate out;
  out.upper = b.upper;
  out.lower = b.lower;
  out.witness = b.witness;
  out.covering_radius = b.witness_radius;
  out.evaluations = b.evaluations;
  out.rounds = b.rounds;
  out.budget_exhausted = b.budget_exhausted;
  return out;
}

PolarizationEstimate polarization(const Configuration& config,
                                  const Kernel& kernel,
                                  const PolarizationOptions& options) {
  return polarization(config, config.set().full_region(), kernel, options);
}

PolarizationEstimate polarization_over_union(const Configuration& config,
                                             const std::vector<Region>& regions,
                                             const Kernel& kernel,
                                             const PolarizationOptions& options) {
  if (regions.empty())
    throw InvalidArgumentError("polarization_over_union: no regions");
  PolarizationEstimate out;
  out.upper = kInf;
  out.lower = kInf;
  for (const Region& r : regions) {
    PolarizationEstimate e = polarization(config, r, kernel, options);
    if (e.upper < out.upper) {
      out.upper = e.upper;
      out.witness = e.witness;
      out.covering_radius = e.covering_radius;
    }
    out.lower = std::min(out.lower, e.lower);
    out.evaluations += e.evaluations;
    out.rounds = std::max(out.rounds, e.rounds);
    out.budget_exhausted = out.budget_exhausted || e.budget_exhausted;
  }
  return out;
}

}  // namespace chebpol
