#include <benchmark/benchmark.h>

#include <cmath>

#include "monoclt/clt.hpp"
#include "monoclt/ergodic.hpp"
#include "monoclt/transforms.hpp"

using namespace monoclt;

namespace {

AtomicMeasure boole() {
  return AtomicMeasure::from_pairs({{-1.0, 0.5}, {1.0, 0.5}});
}

void BM_power_exact(benchmark::State& state) {
  const AtomicMeasure seed = boole();
  const long n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(monotone_power_exact(seed, n));
  }
}
BENCHMARK(BM_power_exact)->Arg(6)->Arg(10)->Arg(12);

void BM_iterate_F(benchmark::State& state) {
  const MeasureSpec spec = MeasureSpec::atomic(boole());
  const long n = state.range(0);
  const Complex z(0.3, 1e-4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(iterate_F(spec, n, z));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_iterate_F)->Arg(1000)->Arg(100000);

void BM_numeric_distance(benchmark::State& state) {
  const MeasureSpec spec = MeasureSpec::atomic(boole());
  NumericDistanceConfig cfg;
  cfg.grid_points = 2001;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        clt_distance(spec, state.range(0), DistanceMethod::numeric,
                     kDefaultAtomBudget, cfg));
  }
}
BENCHMARK(BM_numeric_distance)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_return_series(benchmark::State& state) {
  const MeasureSpec spec = MeasureSpec::atomic(boole());
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        return_sequence_partial(spec, 1, state.range(0)));
  }
}
BENCHMARK(BM_return_series)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
