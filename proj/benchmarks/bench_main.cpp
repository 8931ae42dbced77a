#include <benchmark/benchmark.h>

#include "fareyprim/enumeration.hpp"
#include "fareyprim/farey.hpp"
#include "fareyprim/fsequence.hpp"
#include "fareyprim/primitivity.hpp"

namespace fp = fareyprim;

namespace {

// Words for every rational up to the given level, fresh cache each time.
void BM_EnumerateLevel(benchmark::State& state) {
  const auto xs = fp::rationals_by_level(state.range(0), fp::SignFilter::Both);
  for (auto _ : state) {
    fp::Enumerator e;
    std::size_t letters = 0;
    for (auto x : xs) letters += e.word(x).size();
    benchmark::DoNotOptimize(letters);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_EnumerateLevel)->DenseRange(8, 14, 2);

// Fibonacci-like ratios give the longest words at a given level.
fp::GenPair deep_pair(std::int64_t level) {
  std::int64_t p = 1, q = 1;
  for (std::int64_t i = 1; i < level; ++i) {
    std::swap(p, q);
    p += q;
  }
  const auto x = fp::make_rational(p, q);
  return {fp::enumerate_word(fp::parents(x).larger), fp::enumerate_word(x)};
}

void BM_StallingsFolding(benchmark::State& state) {
  const auto pair = deep_pair(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fp::stallings_basis_check(pair));
  state.counters["letters"] = static_cast<double>(pair.first.size() + pair.second.size());
}
BENCHMARK(BM_StallingsFolding)->DenseRange(10, 25, 5);

void BM_NielsenReduce(benchmark::State& state) {
  const auto pair = deep_pair(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fp::nielsen_reduce(pair));
  state.counters["letters"] = static_cast<double>(pair.first.size() + pair.second.size());
}
BENCHMARK(BM_NielsenReduce)->DenseRange(10, 25, 5);

void BM_CyclicEqual(benchmark::State& state) {
  const auto x = fp::make_rational(31, 9);
  fp::Word e = fp::enumerate_word(x);
  for (std::int64_t k = 1; k < state.range(0); ++k) e = fp::concat(e, fp::enumerate_word(x));
  const fp::Word rotated = fp::rotate(e, e.size() / 3);
  for (auto _ : state) benchmark::DoNotOptimize(fp::cyclic_equal(e, rotated));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(e.size()));
}
BENCHMARK(BM_CyclicEqual)->RangeMultiplier(8)->Range(1, 512);

void BM_NeighborPairs(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(fp::verify_neighbor_pairs(state.range(0), fp::SignFilter::Both, 1));
  }
}
BENCHMARK(BM_NeighborPairs)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
