#include <benchmark/benchmark.h>

#include "cocycle/catalog.hpp"
#include "cocycle/cohomology.hpp"

using namespace cocycle;

static void H2Classes(benchmark::State& state) {
  const char* names[] = {"d8", "c2xd8", "c3xc9", "s4"};
  GroupPtr g = catalog_group(names[state.range(0)]);
  H2Options opt;
  opt.max_order = 64;
  for (auto _ : state) {
    CohClassSet coh = h2_classes(g, opt);
    benchmark::DoNotOptimize(coh.class_count);
  }
  state.SetLabel(names[state.range(0)]);
}
BENCHMARK(H2Classes)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void CentralTypeScanSmall(benchmark::State& state) {
  for (auto _ : state) {
    int count = 0;
    for (const auto& e : scan_catalog(12)) count += is_central_type(build_group(e.spec));
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(CentralTypeScanSmall)->Unit(benchmark::kMillisecond);

static void TwistedCenterDim(benchmark::State& state) {
  auto coh = h2_classes(catalog_group("c2xd8"));
  for (auto _ : state) {
    int dim = twisted_center_dim(coh.transversal.back());
    benchmark::DoNotOptimize(dim);
  }
}
BENCHMARK(TwistedCenterDim)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
