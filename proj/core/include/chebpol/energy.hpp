#pragma once

#include <cstdint>
#include <vector>

#include "chebpol/configuration.hpp"
#include "chebpol/kernel.hpp"
#include "chebpol/set.hpp"

namespace chebpol {

/// E(omega) = sum over ordered pairs i != j of K(x_i, x_j); each unordered
/// pair counts twice. +inf for coincident points with eps = 0.
double energy_of(const Configuration& config, const Kernel& kernel);

struct EnergyOptions {
  int restarts = 4;
  std::uint64_t seed = 1;
  long budget = 20000;  // objective/gradient evaluations
};

struct EnergyResult {
  Configuration config;
  double value = 0.0;
  long iterations = 0;
  long objective_evaluations = 0;
  int restarts = 1;
  bool budget_exhausted = false;
  std::uint64_t seed = 0;
};

/// Projected-gradient descent with seeded multistart; deterministic in
/// (seed, budget) and independent of the thread cap.
EnergyResult minimize_energy(const Set& set, const Kernel& kernel, std::size_t N,
                             const EnergyOptions& options = {});

struct PolarEnergyReport {
  double polarization = 0.0;  // exact discretized optimum
  double energy = 0.0;        // exact discretized optimum
  double bound = 0.0;         // energy / (N - 1)
  bool holds = false;
  long multisets = 0;
};

/// Exhaustive optima of both problems on the same node set and the check
/// that the polarization optimum dominates energy/(N-1).
PolarEnergyReport check_polarization_energy_bound(const Set& set,
                                                  const std::vector<Vec>& nodes,
                                                  const Kernel& kernel,
                                                  std::size_t N);

/// Exhaustive minimal energy over N-point node multisets.
double brute_force_min_energy(const std::vector<Vec>& nodes, const Kernel& kernel,
                              std::size_t N, long max_multisets = 30'000'000);

}  // namespace chebpol
