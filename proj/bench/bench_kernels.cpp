// Serial reference vs OpenMP kernels. Set OMP_NUM_THREADS to vary threads.

#include <benchmark/benchmark.h>

#include "skipgram/counting.hpp"
#include "skipgram/enumeration.hpp"
#include "skipgram/parallel.hpp"
#include "verify/sweep.hpp"

namespace {

using namespace skipgram;

void BM_TotalCountSumSerial(benchmark::State& state) {
  const SkipGramSpec spec{5, static_cast<std::uint64_t>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(total_count_sum(CorpusLength(1'000'000'000), spec));
  }
}
BENCHMARK(BM_TotalCountSumSerial)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_TotalCountSumParallel(benchmark::State& state) {
  const SkipGramSpec spec{5, static_cast<std::uint64_t>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(total_count_sum_parallel(CorpusLength(1'000'000'000), spec));
  }
  state.counters["threads"] = max_parallel_threads();
}
BENCHMARK(BM_TotalCountSumParallel)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_TotalCountClosed(benchmark::State& state) {
  const SkipGramSpec spec{5, static_cast<std::uint64_t>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(total_count_closed(CorpusLength(1'000'000'000), spec));
  }
}
BENCHMARK(BM_TotalCountClosed)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMicrosecond);

void BM_VerifyGridSerial(benchmark::State& state) {
  const auto L = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify::verify_grid_serial({L, 5, 12}));
  }
}
BENCHMARK(BM_VerifyGridSerial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_VerifyGridParallel(benchmark::State& state) {
  const auto L = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify::verify_grid({L, 5, 12}));
  }
  state.counters["threads"] = max_parallel_threads();
}
BENCHMARK(BM_VerifyGridParallel)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_StreamOccurrences(benchmark::State& state) {
  std::vector<std::string> tokens;
  for (int i = 0; i < 10'000; ++i) tokens.push_back("w" + std::to_string(i % 500));
  const TokenSequence seq(std::move(tokens));
  for (auto _ : state) {
    std::size_t emitted = 0;
    for (const auto& occ : all_skip_grams(seq, {3, static_cast<std::uint64_t>(state.range(0))})) {
      benchmark::DoNotOptimize(occ.tokens.data());
      ++emitted;
    }
    state.counters["occurrences"] = static_cast<double>(emitted);
  }
}
BENCHMARK(BM_StreamOccurrences)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
