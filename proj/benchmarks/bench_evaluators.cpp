#include <benchmark/benchmark.h>

#include "pow2comp/halving_eval.hpp"
#include "pow2comp/sparse_eval.hpp"

namespace {

using namespace pow2comp;

// Fresh evaluator per iteration so the memo does not carry over.
void BM_HalvingPow2(benchmark::State& state) {
  const auto k = static_cast<std::uint32_t>(state.range(0));
  const int n_exp = static_cast<int>(state.range(1));
  for (auto _ : state) {
    HalvingEvaluator eval;
    benchmark::DoNotOptimize(eval.residue(SparseIndex::pow2_plus(k, 0), n_exp));
  }
}
BENCHMARK(BM_HalvingPow2)->Args({64, 4})->Args({256, 4})->Args({64, 5})->Args({200, 5})->Unit(benchmark::kMillisecond);

void BM_HalvingNearPow2(benchmark::State& state) {
  const auto k = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    HalvingEvaluator eval;
    benchmark::DoNotOptimize(eval.residue(SparseIndex::pow2_plus(k, -3), 3));
  }
}
BENCHMARK(BM_HalvingNearPow2)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_SparsePow2(benchmark::State& state) {
  const auto k = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    SparseEvaluator eval(2);
    benchmark::DoNotOptimize(eval.residue(SparseIndex::pow2_plus(k, 0), 2));
  }
}
BENCHMARK(BM_SparsePow2)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
