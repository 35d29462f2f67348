#include <benchmark/benchmark.h>

#include "rkdom/harness.hpp"

using namespace rkdom;

namespace {

Grid bound_grid() {
  Grid g;
  g.corpus = CorpusKind::connected;
  g.n_max = 7;
  g.k_min = 2;
  g.k_max = 9;
  return g;
}

void BM_VerifyBounds(benchmark::State& state) {
  const auto exec = state.range(0) == 0 ? Execution::serial : Execution::parallel;
  const Grid grid = bound_grid();
  for (auto _ : state) {
    auto report = verify_theorem(TheoremId::cor3_5, grid, exec);
    benchmark::DoNotOptimize(report.instances_checked);
  }
  state.SetLabel(exec == Execution::serial ? "serial" : "parallel");
}
BENCHMARK(BM_VerifyBounds)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_TreeBuilder(benchmark::State& state) {
  Grid grid;
  grid.corpus = CorpusKind::trees;
  grid.n_max = 10;
  grid.k_min = 2;
  grid.k_max = 9;
  grid.random_trees = 100;
  const auto exec = state.range(0) == 0 ? Execution::serial : Execution::parallel;
  for (auto _ : state) {
    auto report = verify_theorem(TheoremId::thm3_3, grid, exec);
    benchmark::DoNotOptimize(report.instances_checked);
  }
  state.SetLabel(exec == Execution::serial ? "serial" : "parallel");
}
BENCHMARK(BM_TreeBuilder)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BranchAndBound(benchmark::State& state) {
  const Graph k3 = make_family(FamilySpec::cycle(3)).graph;
  Graph g = make_family(FamilySpec::branch(k3, {BranchKind::p4, BranchKind::p4, BranchKind::p5})).graph;
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve(g, k, Variant::srdf).value);
}
BENCHMARK(BM_BranchAndBound)->Arg(3)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
