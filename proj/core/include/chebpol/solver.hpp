#pragma once

#include <cstdint>
#include <vector>

#include "chebpol/configuration.hpp"
#include "chebpol/kernel.hpp"
#include "chebpol/potential.hpp"
#include "chebpol/set.hpp"

namespace chebpol {

enum class SeedStyle { equally_spaced, tensor_lattice, fibonacci_sphere, jittered_uniform };

/// Deterministic starting configuration. equally_spaced: circle angles /
/// interval or curve arclength grid; tensor_lattice: n^p cell centers of the
/// cube (N must be a p-th power); fibonacci_sphere: spiral points on S^2;
/// jittered_uniform: uniform samples (seeded).
Configuration seed_configuration(const Set& set, std::size_t N, SeedStyle style,
                                 std::uint64_t seed = 0);

/// Union over j in {0..m-1}^p of (omega + j)/m on the unit cube.
Configuration tile_configuration(const Configuration& config, int m);

enum class SolveMethod { anneal, exchange, multistart };

struct SolveOptions {
  SolveMethod method = SolveMethod::multistart;
  int restarts = 4;           // multistart width
  std::uint64_t seed = 1;
  long budget = 20000;        // surrogate objective/gradient evaluations
  int anneal_epochs = 20;
  int surrogate_nodes = 0;    // 0 = automatic from N and set kind
  PolarizationOptions certify;
};

struct SolveTrace {
  long objective_evaluations = 0;
  int iterations = 0;
  int restarts = 1;
  std::vector<double> best_curve;  // best surrogate mesh-min per epoch
  bool budget_exhausted = false;
};

struct SolveResult {
  Configuration config;
  PolarizationEstimate estimate;
  SolveTrace trace;
  std::uint64_t seed = 0;
};

/// Outer maximization of P(A; omega) over N-point configurations.
/// anneal ascends a softmin surrogate -(1/beta) log sum_y exp(-beta U(y))
/// over a working mesh with a doubling beta schedule; exchange relocates the
/// least-contributing point toward the current witness; multistart runs
/// seeded anneal restarts and keeps the best certified lower bound.
SolveResult optimize(const Set& set, const Kernel& kernel, std::size_t N,
                     const SolveOptions& options = {});

struct BruteForceResult {
  Configuration config;   // best multiset of nodes
  double value = 0.0;     // exact optimum of the discretized problem
  Vec witness;            // node attaining the inner minimum
  long multisets = 0;
  PolarizationEstimate estimate;  // certified bracket for the returned config
};

struct BruteForceLimits {
  long max_multisets = 30'000'000;
  double max_operations = 6e9;
  bool certify = true;
};

/// Exhaustive search over N-point node multisets with the inner minimum
/// taken over the same nodes. Refuses when the combinatorial budget is
/// exceeded.
BruteForceResult brute_force_small(const Set& set, const std::vector<Vec>& nodes,
                                   const Kernel& kernel, std::size_t N,
                                   const BruteForceLimits& limits = {});

/// M equally spaced nodes (circle angles, interval grid, curve parameters).
std::vector<Vec> uniform_nodes(const Set& set, std::size_t M);

/// Distance between two same-size circle configurations up to rotation:
/// min over candidate rotations (one per gap offset) of the max pointwise
/// chord distance after sorting by angle.
double circle_rotation_distance(const Configuration& a, const Configuration& b);

}  // namespace chebpol
