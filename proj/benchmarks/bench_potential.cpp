#include <benchmark/benchmark.h>

#include "chebpol/potential.hpp"
#include "chebpol/solver.hpp"

using namespace chebpol;

static void BM_PotentialSum(benchmark::State& state) {
  Set circle = Set::circle(1.0);
  auto n = static_cast<std::size_t>(state.range(0));
  Configuration cfg = seed_configuration(circle, n, SeedStyle::equally_spaced);
  Kernel k = Kernel::riesz(3.0);
  Vec y{std::cos(0.1), std::sin(0.1)};
  for (auto _ : state)
    benchmark::DoNotOptimize(potential_at(y, cfg, k));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PotentialSum)->Arg(64)->Arg(1024)->Arg(16384);

static void BM_WeightedPotentialSum(benchmark::State& state) {
  Set circle = Set::circle(1.0);
  auto n = static_cast<std::size_t>(state.range(0));
  Configuration cfg = seed_configuration(circle, n, SeedStyle::equally_spaced);
  Kernel k = Kernel::weighted_riesz(3.0, WeightSpec::circle_cosine(2.0, 1.0));
  Vec y{std::cos(0.1), std::sin(0.1)};
  for (auto _ : state)
    benchmark::DoNotOptimize(potential_at(y, cfg, k));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_WeightedPotentialSum)->Arg(64)->Arg(1024);

static void BM_CertifiedBracket(benchmark::State& state) {
  Set circle = Set::circle(1.0);
  auto n = static_cast<std::size_t>(state.range(0));
  Configuration cfg = seed_configuration(circle, n, SeedStyle::equally_spaced);
  Kernel k = Kernel::riesz(3.0);
  PolarizationOptions popt;
  popt.target_gap_rel = 1e-6;
  for (auto _ : state)
    benchmark::DoNotOptimize(polarization(cfg, k, popt).lower);
}
BENCHMARK(BM_CertifiedBracket)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);
