#include <benchmark/benchmark.h>

#include "pow2comp/analytic.hpp"
#include "pow2comp/exact.hpp"
#include "pow2comp/mod_table.hpp"
#include "pow2comp/partition.hpp"

namespace {

using namespace pow2comp;

void BM_ExactTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_exact_table(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ExactTable)->RangeMultiplier(4)->Range(1 << 8, 1 << 14)->Unit(benchmark::kMillisecond);

void BM_ModTable(benchmark::State& state) {
  const auto limit = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_mod_table(limit, static_cast<int>(state.range(1))));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(limit));
}
BENCHMARK(BM_ModTable)->Args({1 << 16, 5})->Args({1 << 20, 5})->Args({1 << 20, 62})->Unit(benchmark::kMillisecond);

void BM_PartitionTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_partition_table(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_PartitionTable)->Arg(1 << 12)->Arg(1 << 16)->Unit(benchmark::kMillisecond);

void BM_FindRho(benchmark::State& state) {
  const Real tol(state.range(0) == 12 ? "1e-12" : "1e-40");
  for (auto _ : state) benchmark::DoNotOptimize(find_rho(tol));
}
BENCHMARK(BM_FindRho)->Arg(12)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
