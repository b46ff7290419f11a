#include <benchmark/benchmark.h>

#include "chebpol/energy.hpp"
#include "chebpol/solver.hpp"

using namespace chebpol;

static void BM_AnnealSolve(benchmark::State& state) {
  Set circle = Set::circle(1.0);
  Kernel k = Kernel::riesz(2.0);
  for (auto _ : state) {
    SolveOptions so;
    so.method = SolveMethod::anneal;
    so.restarts = 1;
    so.seed = 7;
    so.budget = 500;
    so.certify.target_gap_rel = 1e-3;
    benchmark::DoNotOptimize(
        optimize(circle, k, std::size_t(state.range(0)), so).estimate.lower);
  }
}
BENCHMARK(BM_AnnealSolve)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_EnergyGradientDescent(benchmark::State& state) {
  Set circle = Set::circle(1.0);
  Kernel k = Kernel::riesz(2.0);
  for (auto _ : state) {
    EnergyOptions eo;
    eo.restarts = 1;
    eo.seed = 7;
    eo.budget = 300;
    benchmark::DoNotOptimize(
        minimize_energy(circle, k, std::size_t(state.range(0)), eo).value);
  }
}
BENCHMARK(BM_EnergyGradientDescent)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_BruteForcePolarization(benchmark::State& state) {
  Set circle = Set::circle(1.0);
  auto nodes = uniform_nodes(circle, std::size_t(state.range(0)));
  Kernel k = Kernel::riesz(2.0);
  BruteForceLimits lim;
  lim.certify = false;
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_small(circle, nodes, k, 2, lim).value);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BruteForcePolarization)->Arg(60)->Arg(120)->Arg(240)
    ->Unit(benchmark::kMillisecond);
