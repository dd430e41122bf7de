#include <benchmark/benchmark.h>

#include "cocycle/zn.hpp"

using namespace cocycle::zn;

namespace {

// pseudo-random but reproducible rows
Vec random_row(std::uint64_t& s, std::size_t cols, Value n) {
  Vec v(cols);
  for (auto& x : v) {
    s += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    v[&x - v.data()] = Value((z ^ (z >> 31)) % n);
    x = v[&x - v.data()];
  }
  return v;
}

} // namespace

static void HowellInsertDense(benchmark::State& state) {
  Value n = Value(state.range(0));
  std::size_t cols = 225; // pair coordinates of an order-16 group
  for (auto _ : state) {
    Ring ring(n);
    RowSpan span(ring, cols);
    std::uint64_t seed = 42;
    for (int i = 0; i < 300; ++i) span.insert(random_row(seed, cols, n));
    benchmark::DoNotOptimize(span.pivot_count());
  }
}
BENCHMARK(HowellInsertDense)->Arg(16)->Arg(36)->Arg(72);

static void AnnihilatorMidsize(benchmark::State& state) {
  Value n = Value(state.range(0));
  std::size_t cols = 225;
  Ring ring(n);
  std::vector<Vec> gens;
  std::uint64_t seed = 7;
  for (int i = 0; i < 40; ++i) gens.push_back(random_row(seed, cols, n));
  for (auto _ : state) {
    Mat ann = annihilator(ring, cols, gens);
    benchmark::DoNotOptimize(ann.rows.size());
  }
}
BENCHMARK(AnnihilatorMidsize)->Arg(16)->Arg(36);

BENCHMARK_MAIN();
