#include <benchmark/benchmark.h>

#include "cfact/corpus.hpp"
#include "cfact/invariants.hpp"
#include "cfact/isoclinism.hpp"

using namespace cfact;

static void BM_CentStructure_SL25(benchmark::State& state) {
  const Group& g = *resolve("SL(2,5)");
  for (auto _ : state) benchmark::DoNotOptimize(cent_structure(g));
}
BENCHMARK(BM_CentStructure_SL25);

static void BM_Omega_A5(benchmark::State& state) {
  const Group& g = *resolve("A(5)");
  for (auto _ : state) benchmark::DoNotOptimize(omega(g));
}
BENCHMARK(BM_Omega_A5);

static void BM_Isoclinic_D8Q8(benchmark::State& state) {
  const Group& d8 = *resolve("D(8)");
  const Group& q8 = *resolve("Q8");
  for (auto _ : state) benchmark::DoNotOptimize(isoclinic(d8, q8));
}
BENCHMARK(BM_Isoclinic_D8Q8);

static void BM_BuildG2_5(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_G2(5));
}
BENCHMARK(BM_BuildG2_5);

BENCHMARK_MAIN();
