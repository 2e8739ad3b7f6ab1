#include <benchmark/benchmark.h>

#include "glap/glap.hpp"

namespace {

void run_solve(benchmark::State& state, const glap::Graph& g, glap::CycleKind cycle) {
  const auto l = glap::laplacian_from_graph(g);
  glap::SolverParams p;
  p.cycle = cycle;
  const auto h = glap::setup_hierarchy(l, p);
  const glap::Vector b = glap::random_rhs(l.nrows(), 1);
  int iters = 0;
  double work = 0.0;
  for (auto _ : state) {
    auto r = glap::solve(h, b);
    iters = r.report.iterations;
    work = r.report.work_units;
    benchmark::DoNotOptimize(r.x.data());
  }
  state.counters["iters"] = iters;
  state.counters["work"] = work;
}

void BM_SolvePathV(benchmark::State& state) {
  run_solve(state, glap::path_graph(10000), glap::CycleKind::v);
}
void BM_SolvePathK(benchmark::State& state) {
  run_solve(state, glap::path_graph(10000), glap::CycleKind::k);
}
void BM_SolveGrid3dV(benchmark::State& state) {
  run_solve(state, glap::grid3d_graph(16, 16, 16), glap::CycleKind::v);
}
void BM_SolveSmallWorldV(benchmark::State& state) {
  run_solve(state, glap::small_world_graph(20000, 4, 0.1, 2), glap::CycleKind::v);
}

BENCHMARK(BM_SolvePathV)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolvePathK)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveGrid3dV)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveSmallWorldV)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
