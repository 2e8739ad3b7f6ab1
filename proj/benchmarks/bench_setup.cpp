#include <benchmark/benchmark.h>

#include "glap/glap.hpp"

namespace {

void BM_SetupGrid2d(benchmark::State& state) {
  const auto side = static_cast<glap::index_t>(state.range(0));
  const auto l = glap::laplacian_from_graph(glap::grid2d_graph(side, side));
  for (auto _ : state) {
    auto h = glap::setup_hierarchy(l);
    benchmark::DoNotOptimize(h.levels.data());
  }
  state.counters["nnz"] = static_cast<double>(l.nnz());
}
BENCHMARK(BM_SetupGrid2d)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_SetupPreferentialAttachment(benchmark::State& state) {
  const auto l = glap::laplacian_from_graph(
      glap::preferential_attachment_graph(static_cast<glap::index_t>(state.range(0)), 4, 1));
  for (auto _ : state) {
    auto h = glap::setup_hierarchy(l);
    benchmark::DoNotOptimize(h.levels.data());
  }
  state.counters["nnz"] = static_cast<double>(l.nnz());
}
BENCHMARK(BM_SetupPreferentialAttachment)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_Strength(benchmark::State& state) {
  const auto l = glap::laplacian_from_graph(glap::grid2d_graph(128, 128));
  for (auto _ : state) {
    auto s = glap::strength_matrix(l);
    benchmark::DoNotOptimize(s.values().data());
  }
}
BENCHMARK(BM_Strength)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
