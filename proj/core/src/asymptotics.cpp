#include "chebpol/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "chebpol/distribution.hpp"
#include "chebpol/errors.hpp"
#include "chebpol/potential.hpp"
#include "chebpol/solver.hpp"

namespace chebpol {

double tau(double s, int d, double N) {
  if (d < 1) throw InvalidArgumentError("tau: need d >= 1");
  if (!(N >= 2)) throw InvalidArgumentError("tau: need N >= 2");
  if (s < double(d) - 1e-12)
    throw InvalidArgumentError("tau: needs s >= d (use the N-ratio diagnostic)");
  if (std::fabs(s - double(d)) <= 1e-12 * std::max(1.0, s)) return N * std::log(N);
  return std::pow(N, s / double(d));
}

double riemann_zeta(double s) {
  if (!(s > 1.0)) throw InvalidArgumentError("riemann_zeta: need s > 1");
  // alternating-series (eta) acceleration with Chebyshev-derived weights
  const int n = 48;
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0, c = -d, sum = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    sum += c * std::pow(double(k + 1), -s);
    b *= double(k + n) * double(k - n) / (double(k) + 0.5) / double(k + 1);
  }
  double eta = sum / d;
  return eta / (1.0 - std::pow(2.0, 1.0 - s));
}

double sigma_1d_exact(double s) {
  if (!(s > 1.0)) throw InvalidArgumentError("sigma_1d_exact: need s > 1");
  return 2.0 * (std::pow(2.0, s) - 1.0) * riemann_zeta(s);
}

EpsteinResult epstein_zeta_triangular(double s, double rel_tol) {
  if (!(s > 2.0))
    throw InvalidArgumentError("epstein_zeta_triangular: diverges for s <= 2");
  static std::mutex cache_mutex;
  static std::map<std::pair<double, double>, EpsteinResult> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({s, rel_tol});
    if (it != cache.end()) return it->second;
  }
  // nearest-vector length for unit co-volume
  const double a2 = 2.0 / std::sqrt(3.0);
  const double a = std::sqrt(a2);

  // sum (m^2 + mn + n^2)^(-s/2) over the annulus q in (q_lo, q_hi]
  auto annulus = [&](double q_lo, double q_hi) {
    double sum = 0.0;
    auto m_max = static_cast<long>(std::floor(2.0 * std::sqrt(q_hi / 3.0))) + 1;
    for (long m = -m_max; m <= m_max; ++m) {
      double disc = 4.0 * q_hi - 3.0 * double(m) * double(m);
      if (disc < 0) continue;
      double root = std::sqrt(disc);
      auto n_lo = static_cast<long>(std::ceil((-double(m) - root) / 2.0));
      auto n_hi = static_cast<long>(std::floor((-double(m) + root) / 2.0));
      for (long n = n_lo; n <= n_hi; ++n) {
        double q = double(m) * double(m) + double(m) * double(n) +
                   double(n) * double(n);
        if (q <= q_lo || q > q_hi) continue;
        sum += std::pow(q, -0.5 * s);
      }
    }
    return sum;
  };

  EpsteinResult out;
  double total = 0.0, radius = 8.0, prev_q = 0.0;
  for (int round = 0; round < 24; ++round) {
    double q_hi = radius * radius;
    double add = annulus(prev_q, q_hi);
    double prev_total = total;
    total += add;
    out.final_radius = radius;
    out.last_rel_change =
        prev_total > 0 ? (total - prev_total) / total : 1.0;
    prev_q = q_hi;
    if (round > 0 && out.last_rel_change < rel_tol) break;
    // the enumeration cost grows with the disk area; near s = 2 the tail
    // decays too slowly for the target to be reachable by direct summation,
    // so stop at a work cap and report the achieved relative change
    if (q_hi >= 2e7) break;
    radius *= 2.0;
  }
  out.value = std::pow(a, -s) * total;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache[{s, rel_tol}] = out;
  }
  return out;
}

double sigma_2d_conjectured(double s) {
  if (!(s > 2.0)) throw InvalidArgumentError("sigma_2d_conjectured: need s > 2");
  return 0.5 * (std::pow(3.0, 0.5 * s) - 1.0) * epstein_zeta_triangular(s).value;
}

PredictedLimit predicted_limit(const Set& set, const WeightSpec* weight, double s) {
  const int d = set.hausdorff_dim();
  if (s < double(d) - 1e-12)
    throw InvalidArgumentError("predicted_limit: needs s >= d");
  double mass = weight ? weighted_hausdorff(set, *weight, std::max(s, double(d)))
                       : set.measure();

  PredictedLimit out;
  bool s_equals_d = std::fabs(s - double(d)) <= 1e-12 * std::max(1.0, s);
  if (s_equals_d) {
    double ball_vol = std::pow(kPi, d / 2.0) / std::tgamma(d / 2.0 + 1.0);
    out.value = ball_vol / mass;
    out.provenance = ConstantProvenance::proved;
    return out;
  }
  double sigma;
  if (d == 1) {
    sigma = sigma_1d_exact(s);
    out.provenance = ConstantProvenance::proved;
  } else if (d == 2) {
    sigma = sigma_2d_conjectured(s);
    out.provenance = ConstantProvenance::conjectured;
  } else {
    throw UnavailableConstantError(
        "predicted_limit: no constant is known for d >= 3, s > d");
  }
  out.value = sigma / std::pow(mass, s / double(d));
  return out;
}

SigmaEstimate estimate_limit(const RatioSeries& series) {
  const auto& e = series.entries;
  if (e.size() < 4)
    throw InvalidArgumentError("estimate_limit: need at least 4 entries");

  SigmaEstimate out;
  out.method = "tail least squares: ratio = c + b * N^(-1/d)";

  double lo = e.front().ratio, hi = e.front().ratio, med;
  {
    std::vector<double> rs;
    for (const auto& en : e) {
      rs.push_back(en.ratio);
      lo = std::min(lo, en.ratio);
      hi = std::max(hi, en.ratio);
    }
    std::nth_element(rs.begin(), rs.begin() + rs.size() / 2, rs.end());
    med = rs[rs.size() / 2];
  }
  out.low_confidence = med != 0 && (hi - lo) / std::fabs(med) > 0.5;

  std::size_t tail = std::max<std::size_t>(3, e.size() / 2);
  std::size_t begin = e.size() - tail;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = begin; i < e.size(); ++i) {
    double x = std::pow(e[i].n, -1.0 / series.d);
    double y = e[i].ratio;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double nf = double(tail);
  double denom = nf * sxx - sx * sx;
  double c = denom != 0 ? (sy * sxx - sx * sxy) / denom : e.back().ratio;
  out.value = c;
  out.uncertainty = std::fabs(c - e.back().ratio);
  return out;
}

RatioSeries chebyshev_ratio_series(const Set& set, const Kernel& kernel,
                                   const std::vector<std::size_t>& schedule,
                                   const ChebyshevSeriesOptions& options) {
  const int d = set.hausdorff_dim();
  if (!(kernel.s() < double(d)) || !kernel.is_riesz())
    throw InvalidArgumentError("chebyshev_ratio_series: needs a Riesz kernel with s < d");
  // integrable case: the potential landscape is nearly flat, so a fine fixed
  // mesh minimum serves the diagnostic; nothing is certified or asserted
  std::vector<Vec> nodes = uniform_nodes(set, options.mesh_nodes);
  RatioSeries out;
  out.s = kernel.s();
  out.d = d;
  out.diagnostic = true;
  for (std::size_t n : schedule) {
    Configuration cfg = seed_configuration(set, n, SeedStyle::equally_spaced);
    double value = mesh_min_potential(nodes, cfg, kernel).first;
    out.entries.push_back({double(n), value, value / double(n)});
  }
  return out;
}

}  // namespace chebpol
