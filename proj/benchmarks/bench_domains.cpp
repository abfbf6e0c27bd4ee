#include <benchmark/benchmark.h>

#include "gfd/analysis.hpp"
#include "gfd/cardinality.hpp"
#include "gfd/necklace.hpp"
#include "gfd/never.hpp"

namespace {

void BM_DomainOfScheme(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto scheme = gfd::gf_scheme(n, gfd::KSubset::fishburn(n));
  for (auto _ : state)
    benchmark::DoNotOptimize(gfd::domain_of_scheme(scheme));
}
BENCHMARK(BM_DomainOfScheme)->Arg(5)->Arg(6)->Arg(7);

void BM_FlagsToDomain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto neck = gfd::gf_necklace(n, gfd::KSubset::fishburn(n));
  for (auto _ : state)
    benchmark::DoNotOptimize(gfd::flags_to_domain(neck));
}
BENCHMARK(BM_FlagsToDomain)->Arg(5)->Arg(6)->Arg(7);

void BM_MaximalityCheck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto d = gfd::domain_of_scheme(gfd::gf_scheme(n, gfd::KSubset::fishburn(n)));
  for (auto _ : state)
    benchmark::DoNotOptimize(gfd::is_maximal_condorcet(d));
}
BENCHMARK(BM_MaximalityCheck)->Arg(5)->Arg(6)->Arg(7);

void BM_DirectConnectivity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto d = gfd::domain_of_scheme(gfd::gf_scheme(n, gfd::KSubset::fishburn(n)));
  for (auto _ : state)
    benchmark::DoNotOptimize(gfd::is_directly_connected(d));
}
BENCHMARK(BM_DirectConnectivity)->Arg(5)->Arg(6)->Arg(7);

void BM_SpocSearch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto d = gfd::domain_of_scheme(gfd::gf_scheme(n, gfd::KSubset::fishburn(n)));
  for (auto _ : state)
    benchmark::DoNotOptimize(gfd::find_spoc_arrangement(d));
}
BENCHMARK(BM_SpocSearch)->Arg(5)->Arg(6);

void BM_Census(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(gfd::census(n, false));
}
BENCHMARK(BM_Census)->Arg(6)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
