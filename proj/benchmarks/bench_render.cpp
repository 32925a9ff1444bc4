#include <benchmark/benchmark.h>

#include "chdyn/chdyn.hpp"

namespace {

chdyn::PlaneSpec window(chdyn::PlaneKind kind, int res) {
  chdyn::PlaneSpec spec;
  spec.kind = kind;
  spec.nx = spec.ny = res;
  spec.max_iter = 200;
  if (kind == chdyn::PlaneKind::DynamicalCH) {
    spec.a = -0.0164;
    spec.width = spec.height = 0.49;
  } else {
    spec.width = spec.height = 0.1;
  }
  return spec;
}

void BM_DynamicalPlane(benchmark::State& state) {
  const auto spec = window(chdyn::PlaneKind::DynamicalCH, static_cast<int>(state.range(0)));
  const auto workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(chdyn::render_plane(spec, workers));
  state.SetItemsProcessed(state.iterations() * spec.nx * spec.ny);
}
BENCHMARK(BM_DynamicalPlane)->Args({128, 1})->Args({256, 1})->Args({256, 0})->Unit(benchmark::kMillisecond);

void BM_ParameterPlane(benchmark::State& state) {
  const auto spec = window(chdyn::PlaneKind::ParameterCH, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chdyn::render_plane(spec, 0));
  state.SetItemsProcessed(state.iterations() * spec.nx * spec.ny);
}
BENCHMARK(BM_ParameterPlane)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_ClassifyRa(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(chdyn::classify_ra(-0.0164));
}
BENCHMARK(BM_ClassifyRa);

void BM_FindRoots(benchmark::State& state) {
  const auto p = chdyn::chebyshev_halley_cubic(-0.0164).derivative_numerator();
  for (auto _ : state) benchmark::DoNotOptimize(chdyn::find_roots(p));
}
BENCHMARK(BM_FindRoots);

}  // namespace

BENCHMARK_MAIN();
