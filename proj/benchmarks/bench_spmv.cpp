#include <benchmark/benchmark.h>

#include "glap/glap.hpp"

namespace {

glap::Matrix grid(int side) {
  return glap::laplacian_from_graph(glap::grid2d_graph(side, side));
}

void BM_SpmvPlusTimes(benchmark::State& state) {
  const auto l = grid(static_cast<int>(state.range(0)));
  const glap::Vector x = glap::random_rhs(l.nrows(), 1);
  glap::Vector y(x.size());
  for (auto _ : state) {
    glap::multiply(l, x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * l.nnz());
}
BENCHMARK(BM_SpmvPlusTimes)->Arg(64)->Arg(256);

void BM_SpmvMinHash(benchmark::State& state) {
  const auto l = grid(static_cast<int>(state.range(0)));
  const auto grid_shape = glap::GridShape{static_cast<glap::index_t>(state.range(1)),
                                          static_cast<glap::index_t>(state.range(1))};
  const auto dist = glap::block_partition(l, grid_shape);
  const auto cand = glap::elimination_candidates(l);
  for (auto _ : state) {
    auto z = glap::elimination_choice(dist, cand);
    benchmark::DoNotOptimize(z.data());
  }
  state.SetItemsProcessed(state.iterations() * l.nnz());
}
BENCHMARK(BM_SpmvMinHash)->Args({256, 1})->Args({256, 2})->Args({256, 4});

void BM_AggregationStep(benchmark::State& state) {
  const auto l = grid(static_cast<int>(state.range(0)));
  const auto s = glap::strength_matrix(l);
  const auto dist = glap::block_partition(glap::filter_strength(s, 0.5), glap::GridShape{2, 2});
  const auto init = glap::AggregationState::initial(l.nrows());
  for (auto _ : state) {
    auto next = glap::aggregation_step(dist, init, 8);
    benchmark::DoNotOptimize(next.votes.data());
  }
}
BENCHMARK(BM_AggregationStep)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
