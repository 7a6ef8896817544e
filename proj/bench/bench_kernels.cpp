// Serial reference kernels against their OpenMP versions on the n = 2, |w| <= 6 universe.

#include <benchmark/benchmark.h>

#include "plactic/kernels.hpp"

using namespace plactic;

namespace {

std::vector<Word> const& universe() {
  static auto const words = kernels::word_universe(2, 1, 6);
  return words;
}

AcolSystem const& system2() {
  static AcolSystem const s(2);
  return s;
}

void BM_TableauxSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::tableaux_serial(universe()));
}
void BM_TableauxParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::tableaux_parallel(universe()));
}
void BM_NormalFormsSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::normal_forms_serial(system2(), universe(), Strategy::leftmost));
  }
}
void BM_NormalFormsParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        kernels::normal_forms_parallel(system2(), universe(), Strategy::leftmost));
  }
}
void BM_CrystalLabelsSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::crystal_labels_serial(universe()));
}
void BM_CrystalLabelsParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::crystal_labels_parallel(universe()));
}

}  // namespace

BENCHMARK(BM_TableauxSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableauxParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_NormalFormsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NormalFormsParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CrystalLabelsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrystalLabelsParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
