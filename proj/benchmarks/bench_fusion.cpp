#include <benchmark/benchmark.h>

#include "cocycle/catalog.hpp"
#include "cocycle/fusion.hpp"
#include "cocycle/tensor.hpp"

using namespace cocycle;

static void CharacterTableDixon(benchmark::State& state) {
  const char* names[] = {"s3", "d16", "s4", "c2xc3rs3"};
  GroupPtr g = catalog_group(names[state.range(0)]);
  for (auto _ : state) {
    CharacterTable t = character_table(g);
    benchmark::DoNotOptimize(t.degrees.size());
  }
  state.SetLabel(names[state.range(0)]);
}
BENCHMARK(CharacterTableDixon)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void Su2ReturnSequence(benchmark::State& state) {
  auto [ring, d] = su2_ring(2 * state.range(0) + 2);
  for (auto _ : state) {
    ReturnSequence seq = return_sequence(ring, d, Measure::delta(1), int(state.range(0)));
    benchmark::DoNotOptimize(seq.rows.size());
  }
}
BENCHMARK(Su2ReturnSequence)->Arg(25)->Arg(100)->Unit(benchmark::kMillisecond);

static void LambdaNorm(benchmark::State& state) {
  auto [ring, d] = su2_ring(std::size_t(state.range(0)) + 2);
  for (auto _ : state) {
    double nrm = operator_norm(lambda_matrix(ring, d, Measure::delta(1), state.range(0)));
    benchmark::DoNotOptimize(nrm);
  }
}
BENCHMARK(LambdaNorm)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

static void SliceSpanRank(benchmark::State& state) {
  auto v4 = catalog_group("v4");
  std::vector<int> all = {0, 1, 2, 3};
  auto abs = abelian_structure(v4, Subgroup{v4, all});
  AlternatingForm form{abs.group, {{0, 1}, {1, 0}}};
  GroupTensor f = embed_dual_cocycle(v4, abs, form_to_cocycle(form));
  for (auto _ : state) {
    SliceSpan span = slice_span(r_matrix(f));
    benchmark::DoNotOptimize(span.rank);
  }
}
BENCHMARK(SliceSpanRank)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
