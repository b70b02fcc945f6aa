#include "ldic/bounds.hpp"
#include "ldic/constructions.hpp"
#include "ldic/fq_linalg.hpp"
#include "ldic/index_code.hpp"
#include "ldic/search.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace ldic;

namespace {

FqMatrix random_matrix(std::uint32_t q, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Elem> e(n * n);
  for (auto& x : e) {
    x = static_cast<Elem>(rng() % q);
  }
  return FqMatrix(PrimeField(q), n, n, std::move(e));
}

void BM_RankGF2(benchmark::State& state) {
  const FqMatrix m = random_matrix(2, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank(m));
  }
}
BENCHMARK(BM_RankGF2)->Arg(16)->Arg(64)->Arg(256);

void BM_RankGF5(benchmark::State& state) {
  const FqMatrix m = random_matrix(5, static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank(m));
  }
}
BENCHMARK(BM_RankGF5)->Arg(16)->Arg(64)->Arg(256);

void BM_MinrankCycle(benchmark::State& state) {
  const auto g = SideInformationGraph::directed_cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(minrank_bruteforce(g, PrimeField(2)).value);
  }
}
BENCHMARK(BM_MinrankCycle)->DenseRange(4, 10, 3);

void BM_VerifyCycleVector(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto g = SideInformationGraph::directed_cycle(N);
  const IndexCode code = cycle_vector_code(N, PrimeField(2), min_message_length(N)).code;
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_decodable(g, code).decodable());
  }
}
BENCHMARK(BM_VerifyCycleVector)->Arg(5)->Arg(9);

void BM_ScalarSearch(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto g = SideInformationGraph::directed_cycle(N);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exhaustive_scalar_search(g, PrimeField(2), N, std::nullopt, {kDefaultSearchBudget, 1}));
  }
}
BENCHMARK(BM_ScalarSearch)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
