#include <benchmark/benchmark.h>

#include <omp.h>

#include "qcover/coverage.hpp"
#include "qcover/search.hpp"
#include "qcover/search_kernel.hpp"

using namespace qcover;

namespace {

kernel::Problem full_board(const CoverMasks& masks, int q) {
  kernel::Problem p;
  p.masks = &masks;
  p.q = q;
  for (int i = 0; i < masks.board().area(); ++i) p.candidates.push_back(i);
  return p;
}

// args: q, n
void BM_BruteForce(benchmark::State& state) {
  const CoverMasks masks{Board(static_cast<int>(state.range(1)))};
  const auto problem = full_board(masks, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernel::brute_force(problem).max_cover);
}

// args: q, n, workers
void BM_BranchAndBound(benchmark::State& state) {
  const CoverMasks masks{Board(static_cast<int>(state.range(1)))};
  const auto problem = full_board(masks, static_cast<int>(state.range(0)));
  const int workers = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(kernel::branch_and_bound(problem, workers).max_cover);
}

// args: q, n, workers
void BM_Windowed(benchmark::State& state) {
  SearchParams p;
  p.q = static_cast<int>(state.range(0));
  p.n = static_cast<int>(state.range(1));
  p.mode = SearchMode::kWindowed;
  p.workers = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(windowed_optimal(p).max_cover);
}

const int kMaxWorkers = omp_get_num_procs();

}  // namespace

BENCHMARK(BM_BruteForce)->Args({3, 10})->Args({3, 12})->Args({4, 9})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BranchAndBound)
    ->Args({3, 10, 1})
    ->Args({3, 12, 1})
    ->Args({4, 9, 1})
    ->Args({4, 9, kMaxWorkers})
    ->Args({4, 12, 1})
    ->Args({4, 12, kMaxWorkers})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Windowed)->Args({6, 21, 1})->Args({6, 21, kMaxWorkers})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
