#include <benchmark/benchmark.h>

#include "zfree/dirichlet.hpp"
#include "zfree/factorisatio.hpp"

using namespace zfree;

static void BM_BuildSieve(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_sieve(n));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildSieve)->RangeMultiplier(10)->Range(10'000, 1'000'000)->Unit(benchmark::kMillisecond);

static void BM_FactorisationTables(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const SieveTables sieve = build_sieve(n);
  for (auto _ : state) benchmark::DoNotOptimize(build_factorisation_tables(sieve, n));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FactorisationTables)->RangeMultiplier(10)->Range(10'000, 1'000'000)->Unit(benchmark::kMillisecond);

static void BM_InverseExact(benchmark::State& state) {
  const auto ones = ones_fn<std::int64_t>(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet_inverse(ones));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_InverseExact)->RangeMultiplier(10)->Range(10'000, 1'000'000)->Unit(benchmark::kMillisecond);

static void BM_InverseComplex(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const ArithFn f(n, [](std::uint64_t m) { return m == 1 ? Complex(1.0) : std::polar(0.5, double(m)); });
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet_inverse(f));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_InverseComplex)->RangeMultiplier(10)->Range(10'000, 1'000'000)->Unit(benchmark::kMillisecond);

static void BM_Convolve(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const ArithFn a(n, [](std::uint64_t m) { return std::polar(1.0, double(m)); });
  const ArithFn b(n, [](std::uint64_t m) { return std::polar(1.0, 0.5 * double(m)); });
  for (auto _ : state) benchmark::DoNotOptimize(convolve(a, b));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Convolve)->RangeMultiplier(10)->Range(10'000, 1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
