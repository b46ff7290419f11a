#include <benchmark/benchmark.h>

#include "chebpol/asymptotics.hpp"

using namespace chebpol;

static void BM_RiemannZeta(benchmark::State& state) {
  double s = 2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(riemann_zeta(s));
    s = s == 2.0 ? 3.0 : 2.0;
  }
}
BENCHMARK(BM_RiemannZeta);

static void BM_EpsteinShellSum(benchmark::State& state) {
  // bypass the cache by varying the tolerance slightly each iteration
  double tol = 1e-6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(epstein_zeta_triangular(9.0, tol).value);
    tol *= 1.0000001;
  }
}
BENCHMARK(BM_EpsteinShellSum)->Unit(benchmark::kMillisecond);
