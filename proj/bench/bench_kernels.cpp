// Serial reference kernel against the OpenMP kernel on full descent tables.
#include "oddlen/enumerate.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

using namespace oddlen;

namespace {

Family family_of(std::int64_t code) { return code == 0 ? Family::A : code == 1 ? Family::B : Family::D; }

void BM_serial(benchmark::State& state) {
  const Family f = family_of(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(brute_table_serial(f, n));
  state.SetItemsProcessed(state.iterations() * group_order(f, n));
}

void BM_parallel(benchmark::State& state) {
  const Family f = family_of(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const int workers = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(brute_table_parallel(f, n, {}, workers));
  state.SetItemsProcessed(state.iterations() * group_order(f, n));
  state.counters["workers"] = workers;
}

void kernel_args(benchmark::internal::Benchmark* b, bool with_workers) {
  const int cores = omp_get_num_procs();
  for (auto [f, n] : {std::pair{0, 8}, std::pair{1, 6}, std::pair{2, 6}, std::pair{2, 7}}) {
    if (!with_workers) {
      b->Args({f, n});
      continue;
    }
    for (int w = 1; w <= cores; w *= 2) b->Args({f, n, w});
    if ((cores & (cores - 1)) != 0) b->Args({f, n, cores});
  }
}

} // namespace

BENCHMARK(BM_serial)->Apply([](auto* b) { kernel_args(b, false); })->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel)->Apply([](auto* b) { kernel_args(b, true); })->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
