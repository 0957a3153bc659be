#include <benchmark/benchmark.h>

#include <random>

#include "hadalab/binary_seq.hpp"
#include "hadalab/search.hpp"
#include "hadalab/sring.hpp"

namespace {

using namespace hadalab;

BinarySeq random_seq(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> words((n + 63) / 64);
  for (auto& w : words) w = rng();
  return BinarySeq::from_words(n, std::move(words));
}

void BM_AutocorrVector(benchmark::State& state) {
  const BinarySeq y = random_seq(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(autocorr_vector(y));
}
BENCHMARK(BM_AutocorrVector)->Arg(36)->Arg(64)->Arg(256)->Arg(1024);

void BM_Decimate(benchmark::State& state) {
  const BinarySeq y = random_seq(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(decimate(y, 5));
}
BENCHMARK(BM_Decimate)->Arg(36)->Arg(1024);

void BM_HadamardFull(benchmark::State& state) {
  search::SearchOptions opts;
  opts.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(search::hadamard_full(static_cast<std::size_t>(state.range(0)), opts));
}
BENCHMARK(BM_HadamardFull)->Args({16, 1})->Args({16, 4})->Unit(benchmark::kMillisecond);

void BM_HadamardInvariant(benchmark::State& state) {
  search::SearchOptions opts;
  opts.workers = static_cast<unsigned>(state.range(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(search::hadamard_in_invariant(static_cast<std::size_t>(state.range(0)),
                                                           static_cast<std::uint64_t>(state.range(1)), opts));
  }
}
BENCHMARK(BM_HadamardInvariant)->Args({36, 13, 1})->Args({36, 19, 1})->Args({36, 19, 4})->Unit(benchmark::kMillisecond);

void BM_Barker(benchmark::State& state) {
  search::SearchOptions opts;
  opts.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(search::barker(static_cast<std::size_t>(state.range(0)), opts));
}
BENCHMARK(BM_Barker)->Args({20, 1})->Args({24, 1})->Args({24, 4})->Unit(benchmark::kMillisecond);

void BM_Lattice(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sring::lattice(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_Lattice)->Arg(60)->Arg(196)->Arg(668)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
