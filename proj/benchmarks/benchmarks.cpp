#include <benchmark/benchmark.h>

#include "conset/blocks.hpp"
#include "conset/generators.hpp"
#include "conset/oracle.hpp"
#include "conset/path_solver.hpp"
#include "conset/tree_solver.hpp"

namespace {

void BM_PathSolver(benchmark::State& state) {
  conset::Rng rng(7);
  conset::ColoredGraph g = conset::random_path(rng, static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    auto r = conset::solve_mscs_path(g);
    benchmark::DoNotOptimize(r.witness.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PathSolver)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity();

void BM_TreeSolver(benchmark::State& state) {
  conset::Rng rng(7);
  conset::ColoredGraph g = conset::random_tree(rng, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    auto r = conset::solve_mscs_tree(g);
    benchmark::DoNotOptimize(r.witness.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TreeSolver)->DenseRange(20, 100, 20)->Complexity();

void BM_Oracle(benchmark::State& state) {
  conset::Rng rng(7);
  conset::ColoredGraph g = conset::random_tree(rng, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    auto r = conset::brute_mscs(g);
    benchmark::DoNotOptimize(r.witness.data());
  }
}
BENCHMARK(BM_Oracle)->DenseRange(10, 18, 2);

void BM_BlockDecomposition(benchmark::State& state) {
  conset::Rng rng(7);
  conset::ColoredGraph g = conset::random_tree(rng, static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    auto b = conset::decompose_blocks(g);
    benchmark::DoNotOptimize(b.block_of.data());
  }
}
BENCHMARK(BM_BlockDecomposition)->Range(1 << 10, 1 << 16);

}  // namespace

BENCHMARK_MAIN();
