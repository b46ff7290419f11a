#include "chebpol/energy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "chebpol/errors.hpp"
#include "chebpol/parallel.hpp"
#include "chebpol/solver.hpp"

namespace chebpol {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double energy_of_points(const std::vector<Vec>& pts, const Kernel& kernel) {
  double e = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      e += kernel.eval(pts[i], pts[j]);
    }
  return e;
}

// gradient of E with respect to x_i: field and source roles both contribute
Vec energy_grad_point(const std::vector<Vec>& pts, std::size_t i,
                      const Kernel& kernel) {
  Vec g(pts[i].dim());
  for (std::size_t j = 0; j < pts.size(); ++j) {
    if (j == i) continue;
    g += kernel.grad_field(pts[i], pts[j]);
    g += kernel.grad_source(pts[j], pts[i]);
  }
  return g;
}

struct DescentOutcome {
  std::vector<Vec> pts;
  double value = kInf;
  long iterations = 0;
  long evals = 0;
  bool budget_exhausted = false;
};

DescentOutcome descend(const Set& set, const Kernel& user_kernel,
                       std::vector<Vec> pts, long budget) {
  Kernel kernel =
      user_kernel.with_eps(std::max(user_kernel.eps(), 1e-12 * set.diameter()));
  DescentOutcome out;
  long evals = 0;
  double e = energy_of_points(pts, kernel);
  ++evals;
  const std::size_t n = pts.size();
  std::vector<Vec> grad(n), cand(n);
  while (evals < budget) {
    double gmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      grad[i] = energy_grad_point(pts, i, kernel);
      gmax = std::max(gmax, grad[i].norm());
    }
    if (!(gmax > 0)) break;
    double nn = kInf;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        nn = std::min(nn, dist(pts[i], pts[j]));
    double eta = 0.1 * std::max(nn, 1e-9 * set.diameter()) / gmax;
    bool accepted = false;
    double e_new = e;
    for (int back = 0; back < 30 && evals < budget; ++back, eta *= 0.5) {
      for (std::size_t i = 0; i < n; ++i)
        cand[i] = set.project(pts[i] - eta * grad[i]);
      e_new = energy_of_points(cand, kernel);
      ++evals;
      if (e_new < e) {
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
    pts = cand;
    ++out.iterations;
    double rel = (e - e_new) / std::max(1.0, std::fabs(e_new));
    e = e_new;
    if (rel < 1e-12) break;
  }
  out.pts = std::move(pts);
  out.evals = evals;
  out.budget_exhausted = evals >= budget;
  out.value = energy_of_points(out.pts, user_kernel);
  return out;
}

}  // namespace

double energy_of(const Configuration& config, const Kernel& kernel) {
  if (config.size() < 2)
    throw InvalidArgumentError("energy_of: need N >= 2");
  return energy_of_points(config.points(), kernel);
}

EnergyResult minimize_energy(const Set& set, const Kernel& kernel, std::size_t N,
                             const EnergyOptions& options) {
  if (N < 2) throw InvalidArgumentError("minimize_energy: need N >= 2");
  int restarts = std::max(1, options.restarts);
  long per_budget = std::max<long>(1, options.budget / restarts);

  std::vector<DescentOutcome> outs(restarts);
  parallel_for(std::size_t(restarts), [&](std::size_t i) {
    std::uint64_t rseed = options.seed + 1000003ull * i;
    std::vector<Vec> pts;
    if (i == 0) {
      try {
        pts = seed_configuration(set, N, SeedStyle::equally_spaced, rseed).points();
      } catch (const InvalidArgumentError&) {
        pts = set.sample_uniform(N, rseed);
      }
    } else {
      pts = set.sample_uniform(N, rseed);
    }
    outs[i] = descend(set, kernel, std::move(pts), per_budget);
  });

  std::size_t best = 0;
  for (std::size_t i = 1; i < outs.size(); ++i)
    if (outs[i].value < outs[best].value) best = i;

  EnergyResult out{Configuration(set, outs[best].pts), outs[best].value,
                   outs[best].iterations, 0, restarts, false, options.seed};
  for (const auto& o : outs) {
    out.objective_evaluations += o.evals;
    out.budget_exhausted |= o.budget_exhausted;
  }
  return out;
}

double brute_force_min_energy(const std::vector<Vec>& nodes, const Kernel& kernel,
                              std::size_t N, long max_multisets) {
  const std::size_t M = nodes.size();
  if (M < 2 || N < 2)
    throw InvalidArgumentError("brute_force_min_energy: need nodes and N >= 2");
  double multisets = 1.0;
  for (std::size_t i = 0; i < N; ++i)
    multisets = multisets * double(M + i) / double(i + 1);
  if (multisets > double(max_multisets))
    throw ResourceLimitError("brute_force_min_energy: budget exceeded");

  std::vector<double> km(M * M);
  for (std::size_t a = 0; a < M; ++a)
    for (std::size_t y = 0; y < M; ++y)
      km[a * M + y] = kernel.eval(nodes[y], nodes[a]);

  std::vector<double> best_per_a1(M, kInf);
  parallel_for(M, [&](std::size_t a1) {
    std::vector<std::size_t> pick(N);
    std::vector<double> pair_sum(N);  // energy of pick[0..level]
    pick[0] = a1;
    pair_sum[0] = 0.0;
    double best = kInf;
    std::function<void(std::size_t)> rec = [&](std::size_t level) {
      for (std::size_t a = pick[level - 1]; a < M; ++a) {
        pick[level] = a;
        double e = pair_sum[level - 1];
        for (std::size_t t = 0; t < level; ++t) e += 2.0 * km[pick[t] * M + a];
        if (level + 1 == N) {
          best = std::min(best, e);
        } else if (e < best || kernel.kind() == KernelKind::log) {
          // partial energies only bound the total for nonnegative kernels,
          // so the log kernel enumerates without pruning
          pair_sum[level] = e;
          rec(level + 1);
        }
      }
    };
    rec(1);
    best_per_a1[a1] = best;
  });

  double best = kInf;
  for (double v : best_per_a1) best = std::min(best, v);
  return best;
}

PolarEnergyReport check_polarization_energy_bound(const Set& set,
                                                  const std::vector<Vec>& nodes,
                                                  const Kernel& kernel,
                                                  std::size_t N) {
  if (N < 2)
    throw InvalidArgumentError("check_polarization_energy_bound: need N >= 2");
  BruteForceLimits lim;
  lim.certify = false;
  BruteForceResult pol = brute_force_small(set, nodes, kernel, N, lim);
  double energy = brute_force_min_energy(nodes, kernel, N);
  PolarEnergyReport out;
  out.polarization = pol.value;
  out.energy = energy;
  out.bound = energy / double(N - 1);
  out.holds = out.polarization >= out.bound - 1e-12 * std::fabs(out.bound);
  out.multisets = pol.multisets;
  return out;
}

}  // namespace chebpol
