#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "sqcirc/sqcirc.hpp"

namespace {

sqcirc::Word random_word(std::size_t k, std::size_t length) {
  std::mt19937_64 rng(length * 31 + k);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(k) - 1);
  std::string s;
  for (std::size_t i = 0; i < length; ++i) s.push_back(static_cast<char>('a' + pick(rng)));
  return sqcirc::Word(s);
}

void BM_DistinctSquares(benchmark::State& state) {
  const auto w = random_word(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sqcirc::distinct_squares(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DistinctSquares)->RangeMultiplier(2)->Range(16, 1024)->Complexity();

void BM_AllSmallCircuits(benchmark::State& state) {
  const auto w = random_word(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sqcirc::all_small_circuits(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AllSmallCircuits)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_TheoremCheck(benchmark::State& state) {
  const auto w = random_word(3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sqcirc::theorem_check(w));
}
BENCHMARK(BM_TheoremCheck)->Arg(22)->Arg(64)->Arg(128);

void BM_AuditWord(benchmark::State& state) {
  const auto w = random_word(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sqcirc::audit_word(w));
}
BENCHMARK(BM_AuditWord)->Arg(12)->Arg(16);

void BM_ExhaustiveSearch(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sqcirc::exhaustive_search(2, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_ExhaustiveSearch)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
