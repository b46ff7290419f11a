#include "chebpol/solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "chebpol/errors.hpp"
#include "chebpol/parallel.hpp"
#include "chebpol/rng.hpp"

namespace chebpol {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<Vec> surrogate_nodes_for(const Set& set, std::size_t N, int requested) {
  int d = set.chart_dim();
  if (d == 1) {
    std::size_t K = requested > 0
                        ? std::size_t(requested)
                        : std::clamp<std::size_t>(64 * N, 2048, 16384);
    switch (set.kind()) {
      case SetKind::interval:
      case SetKind::circle:
      case SetKind::curve:
        return uniform_nodes(set, K);
      default:
        break;
    }
  }
  std::size_t K = requested > 0 ? std::size_t(requested)
                                : std::clamp<std::size_t>(32 * N, 1024, 16384);
  double res = 0.75 * std::pow(set.measure() / double(K), 1.0 / d);
  return set.region_mesh(set.full_region(), res).nodes;
}

struct Surrogate {
  const Set& set;
  Kernel kernel;  // clamped copy for finite gradients
  std::vector<Vec> nodes;
  long evals = 0;

  void potentials(const std::vector<Vec>& pts, std::vector<double>& u) {
    u.resize(nodes.size());
    parallel_for(nodes.size(), [&](std::size_t i) {
      u[i] = kernel.potential_sum(nodes[i], pts);
    });
    ++evals;
  }

  double mesh_min(const std::vector<Vec>& pts, std::size_t* arg = nullptr) {
    std::vector<double> u;
    potentials(pts, u);
    std::size_t a = 0;
    for (std::size_t i = 1; i < u.size(); ++i)
      if (u[i] < u[a]) a = i;
    if (arg) *arg = a;
    return u[a];
  }

  // softmin value; also fills the node weights when grad != nullptr
  double softmin(const std::vector<Vec>& pts, double beta,
                 std::vector<double>* weights) {
    std::vector<double> u;
    potentials(pts, u);
    double m = *std::min_element(u.begin(), u.end());
    if (!std::isfinite(m)) return m;
    double z = 0;
    for (double v : u) z += std::exp(-beta * (v - m));
    if (weights) {
      weights->resize(u.size());
      for (std::size_t i = 0; i < u.size(); ++i)
        (*weights)[i] = std::exp(-beta * (u[i] - m)) / z;
    }
    return m - std::log(z) / beta;
  }
};

double min_pairwise(const std::vector<Vec>& pts) {
  double best = kInf;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      best = std::min(best, dist(pts[i], pts[j]));
  return best;
}

// one-time deterministic jitter so coincident seeds get distinct gradients
void unlock_coincident(const Set& set, std::vector<Vec>& pts) {
  double delta = 1e-6 * set.diameter();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (dist(pts[i], pts[j]) == 0.0) {
        Vec moved = pts[i];
        moved[int(i % std::size_t(set.ambient_dim()))] += delta * double(j + 1);
        pts[i] = set.project(moved);
      }
}

struct AnnealOutcome {
  std::vector<Vec> pts;
  double mesh_value = -kInf;
  long evals = 0;
  int iterations = 0;
  bool budget_exhausted = false;
  std::vector<double> best_curve;
};

AnnealOutcome anneal(const Set& set, const Kernel& user_kernel, std::size_t N,
                     std::vector<Vec> pts, const SolveOptions& opt) {
  Surrogate sur{set, user_kernel.with_eps(std::max(user_kernel.eps(),
                                                   1e-12 * set.diameter())),
                surrogate_nodes_for(set, N, opt.surrogate_nodes)};
  unlock_coincident(set, pts);

  AnnealOutcome out;
  out.pts = pts;
  out.mesh_value = sur.mesh_min(pts);
  out.best_curve.push_back(out.mesh_value);

  // beta from a robust spread: seeds can coincide with mesh nodes, making
  // the raw mean useless under the clamped singularity
  std::vector<double> u0;
  sur.potentials(pts, u0);
  double m0 = *std::min_element(u0.begin(), u0.end());
  std::vector<double> sorted = u0;
  std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2,
                   sorted.end());
  double med0 = sorted[sorted.size() / 2];
  double scale = std::max({med0 - m0, 1e-9 * std::fabs(med0), 1e-12});
  double beta = 10.0 / scale;

  std::vector<double> weights;
  std::vector<Vec> grad(N), cand(N);
  for (int epoch = 0; epoch < opt.anneal_epochs; ++epoch, beta *= 2.0) {
    for (int iter = 0; iter < 400; ++iter) {
      if (sur.evals >= opt.budget) {
        out.budget_exhausted = true;
        break;
      }
      double f = sur.softmin(pts, beta, &weights);
      if (!std::isfinite(f)) break;
      double gmax = 0;
      for (std::size_t j = 0; j < N; ++j) {
        Vec g(set.ambient_dim());
        for (std::size_t i = 0; i < sur.nodes.size(); ++i) {
          if (weights[i] == 0.0) continue;
          g += weights[i] * sur.kernel.grad_source(sur.nodes[i], pts[j]);
        }
        grad[j] = g;
        gmax = std::max(gmax, g.norm());
      }
      if (!(gmax > 0)) break;
      double nn = N > 1 ? min_pairwise(pts) : 0.1 * set.diameter();
      double eta = 0.1 * std::max(nn, 1e-9 * set.diameter()) / gmax;
      bool accepted = false;
      double f_new = f;
      for (int back = 0; back < 30; ++back, eta *= 0.5) {
        for (std::size_t j = 0; j < N; ++j)
          cand[j] = set.project(pts[j] + eta * grad[j]);
        f_new = sur.softmin(cand, beta, nullptr);
        if (f_new > f) {
          accepted = true;
          break;
        }
        if (sur.evals >= opt.budget) break;
      }
      if (!accepted) break;
      pts = cand;
      ++out.iterations;
      if (f_new - f < 1e-10 * std::max(1.0, std::fabs(f_new))) break;
    }
    double mv = sur.mesh_min(pts);
    if (mv > out.mesh_value) {
      out.mesh_value = mv;
      out.pts = pts;
    }
    out.best_curve.push_back(out.mesh_value);
    if (out.budget_exhausted) break;
  }
  out.evals = sur.evals;
  return out;
}

AnnealOutcome exchange(const Set& set, const Kernel& user_kernel, std::size_t N,
                       std::vector<Vec> pts, const SolveOptions& opt) {
  Surrogate sur{set, user_kernel.with_eps(std::max(user_kernel.eps(),
                                                   1e-12 * set.diameter())),
                surrogate_nodes_for(set, N, opt.surrogate_nodes)};
  unlock_coincident(set, pts);
  AnnealOutcome out;
  out.pts = pts;
  out.mesh_value = sur.mesh_min(pts);
  out.best_curve.push_back(out.mesh_value);
  while (sur.evals < opt.budget) {
    std::size_t warg = 0;
    double current = sur.mesh_min(pts, &warg);
    const Vec& witness = sur.nodes[warg];
    std::size_t jmin = 0;
    double cmin = kInf;
    for (std::size_t j = 0; j < N; ++j) {
      double c = sur.kernel.eval(witness, pts[j]);
      if (c < cmin) {
        cmin = c;
        jmin = j;
      }
    }
    double best_cand = current;
    Vec best_pos = pts[jmin];
    for (double blend : {1.0, 0.5, 0.25}) {
      Vec moved = pts[jmin] + blend * (witness - pts[jmin]);
      std::vector<Vec> trial = pts;
      trial[jmin] = set.project(moved);
      double v = sur.mesh_min(trial);
      if (v > best_cand) {
        best_cand = v;
        best_pos = trial[jmin];
      }
    }
    if (!(best_cand > current)) break;
    pts[jmin] = best_pos;
    ++out.iterations;
    if (best_cand > out.mesh_value) {
      out.mesh_value = best_cand;
      out.pts = pts;
    }
    out.best_curve.push_back(out.mesh_value);
  }
  out.budget_exhausted = sur.evals >= opt.budget;
  out.evals = sur.evals;
  return out;
}

SeedStyle canonical_style(const Set& set) {
  switch (set.kind()) {
    case SetKind::interval:
    case SetKind::circle:
    case SetKind::curve:
      return SeedStyle::equally_spaced;
    case SetKind::sphere:
      return set.ambient_dim() == 3 ? SeedStyle::fibonacci_sphere
                                    : SeedStyle::equally_spaced;
    default:
      return SeedStyle::jittered_uniform;
  }
}

std::vector<Vec> seed_points(const Set& set, std::size_t N, SeedStyle style,
                             std::uint64_t seed) {
  switch (style) {
    case SeedStyle::equally_spaced: {
      std::vector<Vec> pts;
      pts.reserve(N);
      switch (set.kind()) {
        case SetKind::circle:
        case SetKind::sphere: {
          if (set.kind() == SetKind::sphere && set.ambient_dim() != 2)
            throw InvalidArgumentError("equally-spaced seed needs a 1-d set");
          double r = set.kind() == SetKind::circle ? set.measure() / kTwoPi : 1.0;
          for (std::size_t k = 0; k < N; ++k) {
            double t = kTwoPi * double(k) / double(N);
            pts.push_back(Vec{r * std::cos(t), r * std::sin(t)});
          }
          return pts;
        }
        case SetKind::interval:
        case SetKind::curve: {
          Box dom = set.chart_domain();
          for (std::size_t k = 0; k < N; ++k) {
            double t = dom.lo[0] +
                       (dom.hi[0] - dom.lo[0]) * (double(k) + 0.5) / double(N);
            pts.push_back(set.chart_to_ambient(Vec{t}));
          }
          return pts;
        }
        default:
          throw InvalidArgumentError("equally-spaced seed needs a 1-d set");
      }
    }
    case SeedStyle::tensor_lattice: {
      if (set.kind() != SetKind::cube)
        throw InvalidArgumentError("tensor-lattice seed needs a cube");
      int p = set.ambient_dim();
      auto n = static_cast<std::size_t>(std::llround(std::pow(double(N), 1.0 / p)));
      std::size_t np = 1;
      for (int i = 0; i < p; ++i) np *= n;
      if (np != N)
        throw InvalidArgumentError("tensor-lattice seed needs N = n^p");
      std::vector<Vec> pts(N, Vec(p));
      for (std::size_t idx = 0; idx < N; ++idx) {
        std::size_t rem = idx;
        for (int i = 0; i < p; ++i) {
          pts[idx][i] = (double(rem % n) + 0.5) / double(n);
          rem /= n;
        }
      }
      return pts;
    }
    case SeedStyle::fibonacci_sphere: {
      if (set.kind() != SetKind::sphere || set.ambient_dim() != 3)
        throw InvalidArgumentError("fibonacci seed needs the sphere in R^3");
      std::vector<Vec> pts;
      pts.reserve(N);
      const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
      for (std::size_t k = 0; k < N; ++k) {
        double z = 1.0 - (2.0 * double(k) + 1.0) / double(N);
        double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        double phi = kTwoPi * double(k) / golden;
        pts.push_back(Vec{rho * std::cos(phi), rho * std::sin(phi), z});
      }
      return pts;
    }
    case SeedStyle::jittered_uniform:
      return set.sample_uniform(N, seed);
  }
  throw InvalidArgumentError("seed_configuration: bad style");
}

}  // namespace

Configuration seed_configuration(const Set& set, std::size_t N, SeedStyle style,
                                 std::uint64_t seed) {
  if (N < 1) throw InvalidArgumentError("seed_configuration: need N >= 1");
  return Configuration(set, seed_points(set, N, style, seed));
}

Configuration tile_configuration(const Configuration& config, int m) {
  const Set& set = config.set();
  if (set.kind() != SetKind::cube)
    throw InvalidArgumentError("tile_configuration: set must be a cube");
  if (m < 2) throw InvalidArgumentError("tile_configuration: need m >= 2");
  int p = set.ambient_dim();
  std::size_t blocks = 1;
  for (int i = 0; i < p; ++i) blocks *= std::size_t(m);
  std::vector<Vec> pts;
  pts.reserve(blocks * config.size());
  for (std::size_t b = 0; b < blocks; ++b) {
    Vec offset(p);
    std::size_t rem = b;
    for (int i = 0; i < p; ++i) {
      offset[i] = double(rem % std::size_t(m));
      rem /= std::size_t(m);
    }
    for (const Vec& x : config.points()) {
      Vec y(p);
      for (int i = 0; i < p; ++i) y[i] = (x[i] + offset[i]) / double(m);
      pts.push_back(y);
    }
  }
  return Configuration(set, std::move(pts));
}

std::vector<Vec> uniform_nodes(const Set& set, std::size_t M) {
  if (M < 2) throw InvalidArgumentError("uniform_nodes: need M >= 2");
  std::vector<Vec> nodes;
  nodes.reserve(M);
  switch (set.kind()) {
    case SetKind::circle: {
      double r = set.measure() / kTwoPi;
      for (std::size_t k = 0; k < M; ++k) {
        double t = kTwoPi * double(k) / double(M);
        nodes.push_back(Vec{r * std::cos(t), r * std::sin(t)});
      }
      return nodes;
    }
    case SetKind::interval:
    case SetKind::curve: {
      Box dom = set.chart_domain();
      for (std::size_t k = 0; k < M; ++k) {
        double t = dom.lo[0] + (dom.hi[0] - dom.lo[0]) * double(k) / double(M - 1);
        nodes.push_back(set.chart_to_ambient(Vec{t}));
      }
      return nodes;
    }
    default:
      throw InvalidArgumentError("uniform_nodes: needs a 1-d set");
  }
}

double circle_rotation_distance(const Configuration& a, const Configuration& b) {
  if (a.set().kind() != SetKind::circle || b.set().kind() != SetKind::circle)
    throw InvalidArgumentError("circle_rotation_distance: needs circles");
  if (a.size() != b.size())
    throw InvalidArgumentError("circle_rotation_distance: size mismatch");
  const std::size_t n = a.size();
  double r = a.set().measure() / kTwoPi;
  auto angles = [](const Configuration& c) {
    std::vector<double> t;
    t.reserve(c.size());
    for (const Vec& p : c.points()) {
      double th = std::atan2(p[1], p[0]);
      t.push_back(th < 0 ? th + kTwoPi : th);
    }
    std::sort(t.begin(), t.end());
    return t;
  };
  std::vector<double> ta = angles(a), tb = angles(b);
  double best = kInf;
  // one candidate rotation per cyclic offset aligns ta[0] with tb[k]
  for (std::size_t k = 0; k < n; ++k) {
    double rot = tb[k] - ta[0];
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double d = std::remainder(ta[i] + rot - tb[(k + i) % n], kTwoPi);
      worst = std::max(worst, 2.0 * r * std::fabs(std::sin(0.5 * d)));
    }
    best = std::min(best, worst);
  }
  return best;
}

SolveResult optimize(const Set& set, const Kernel& kernel, std::size_t N,
                     const SolveOptions& options) {
  if (N < 1) throw InvalidArgumentError("optimize: need N >= 1");
  if (options.budget < 1) throw InvalidArgumentError("optimize: need a budget");

  int restarts =
      options.method == SolveMethod::multistart ? std::max(1, options.restarts) : 1;
  SolveOptions per = options;
  per.budget = std::max<long>(1, options.budget / restarts);

  struct Candidate {
    AnnealOutcome outcome;
    PolarizationEstimate estimate;
    std::uint64_t seed;
  };
  std::vector<Candidate> cands(restarts);

  parallel_for(std::size_t(restarts), [&](std::size_t i) {
    std::uint64_t rseed = options.seed + 1000003ull * i;
    SeedStyle style =
        i == 0 ? canonical_style(set) : SeedStyle::jittered_uniform;
    std::vector<Vec> pts;
    try {
      pts = seed_points(set, N, style, rseed);
    } catch (const InvalidArgumentError&) {
      pts = seed_points(set, N, SeedStyle::jittered_uniform, rseed);
    }
    AnnealOutcome o = options.method == SolveMethod::exchange
                          ? exchange(set, kernel, N, std::move(pts), per)
                          : anneal(set, kernel, N, std::move(pts), per);
    Candidate c{std::move(o), {}, rseed};
    Configuration cfg(set, c.outcome.pts);
    c.estimate = polarization(cfg, kernel, options.certify);
    cands[i] = std::move(c);
  });

  // argmax over restarts in index order by certified lower bound
  std::size_t best = 0;
  for (std::size_t i = 1; i < cands.size(); ++i)
    if (cands[i].estimate.lower > cands[best].estimate.lower) best = i;

  Candidate& c = cands[best];
  SolveResult out{Configuration(set, c.outcome.pts), c.estimate, {}, c.seed};
  out.trace.restarts = restarts;
  out.trace.iterations = c.outcome.iterations;
  out.trace.best_curve = c.outcome.best_curve;
  for (const auto& cc : cands) {
    out.trace.objective_evaluations += cc.outcome.evals;
    out.trace.budget_exhausted |= cc.outcome.budget_exhausted;
  }
  return out;
}

BruteForceResult brute_force_small(const Set& set, const std::vector<Vec>& nodes,
                                   const Kernel& kernel, std::size_t N,
                                   const BruteForceLimits& limits) {
  const std::size_t M = nodes.size();
  if (M < 2) throw InvalidArgumentError("brute_force_small: need nodes");
  if (N < 1) throw InvalidArgumentError("brute_force_small: need N >= 1");

  double multisets = 1.0;
  for (std::size_t i = 0; i < N; ++i)
    multisets = multisets * double(M + i) / double(i + 1);
  if (multisets > double(limits.max_multisets) ||
      multisets * double(M) > limits.max_operations)
    throw ResourceLimitError("brute_force_small: combinatorial budget exceeded");

  // kernel matrix: row a holds K(node_y, node_a) over all y
  std::vector<double> km(M * M);
  parallel_for(M, [&](std::size_t a) {
    for (std::size_t y = 0; y < M; ++y)
      km[a * M + y] = kernel.eval(nodes[y], nodes[a]);
  });

  struct Best {
    double value = -kInf;
    std::vector<std::size_t> pick;
    std::size_t witness = 0;
  };
  std::vector<Best> per_a1(M);

  parallel_for(M, [&](std::size_t a1) {
    Best best;
    std::vector<std::vector<double>> sums(N + 1, std::vector<double>(M));
    std::vector<std::size_t> pick(N);
    const double* row1 = &km[a1 * M];
    for (std::size_t y = 0; y < M; ++y) sums[1][y] = row1[y];
    pick[0] = a1;

    std::function<void(std::size_t)> descend = [&](std::size_t level) {
      const auto& src = sums[level];
      for (std::size_t a = pick[level - 1]; a < M; ++a) {
        pick[level] = a;
        const double* row = &km[a * M];
        if (level + 1 == N) {
          std::size_t arg = 0;
          double mn = kInf;
          for (std::size_t y = 0; y < M; ++y) {
            double v = src[y] + row[y];
            if (v < mn) {
              mn = v;
              arg = y;
            }
          }
          if (mn > best.value) {
            best.value = mn;
            best.pick.assign(pick.begin(), pick.begin() + N);
            best.witness = arg;
          }
        } else {
          auto& dst = sums[level + 1];
          for (std::size_t y = 0; y < M; ++y) dst[y] = src[y] + row[y];
          descend(level + 1);
        }
      }
    };
    if (N == 1) {
      const auto& s = sums[1];
      std::size_t arg = 0;
      double mn = s[0];
      for (std::size_t y = 1; y < M; ++y)
        if (s[y] < mn) {
          mn = s[y];
          arg = y;
        }
      best.value = mn;
      best.pick = {a1};
      best.witness = arg;
    } else {
      descend(1);
    }
    per_a1[a1] = std::move(best);
  });

  Best total;
  for (const Best& b : per_a1)
    if (b.value > total.value) total = b;

  std::vector<Vec> pts;
  pts.reserve(N);
  for (std::size_t a : total.pick) pts.push_back(nodes[a]);
  BruteForceResult out{Configuration(set, pts), total.value, nodes[total.witness],
                       long(multisets), {}};
  if (limits.certify) {
    PolarizationOptions popt;
    popt.target_gap_rel = 1e-5;
    out.estimate = polarization(out.config, kernel, popt);
  }
  return out;
}

}  // namespace chebpol
