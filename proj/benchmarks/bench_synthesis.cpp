#include <benchmark/benchmark.h>

#include "pow2comp/halving_eval.hpp"
#include "pow2comp/table_synth.hpp"

namespace {

using namespace pow2comp;

void BM_Synthesize(benchmark::State& state) {
  const int n_exp = static_cast<int>(state.range(0));
  const auto cap = static_cast<std::uint32_t>(state.range(1));
  for (auto _ : state) {
    HalvingEvaluator source(kDefaultHalvingBudget, true);
    benchmark::DoNotOptimize(synthesize(n_exp, cap, 4, source));
  }
}
BENCHMARK(BM_Synthesize)->Args({2, 5})->Args({3, 5})->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_Classify(benchmark::State& state) {
  HalvingEvaluator source(kDefaultHalvingBudget, true);
  const auto table = synthesize(3, 6, 4, source);
  const auto n = SparseIndex::pow2_plus(static_cast<std::uint32_t>(state.range(0)), -3);
  for (auto _ : state) benchmark::DoNotOptimize(classify(n, table));
}
BENCHMARK(BM_Classify)->Arg(100)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
