// Serial reference scans against the OpenMP kernels.
#include <benchmark/benchmark.h>

#include "monopath/parallel.hpp"

using namespace monopath;

namespace {

const Composition& composition_for(int id) {
  static const std::vector<Composition> table{
      Composition::parse("2,2,2,2"),      // 2520 words
      Composition::parse("3,2,2,2"),      // 7560
      Composition::parse("2,2,2,2,2"),    // 113400
      Composition::parse("3,3,2,2,2"),    // 1 663 200
  };
  return table.at(id);
}

void BM_CountNonNesting_Serial(benchmark::State& state) {
  const auto& lambda = composition_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::count_non_nesting(lambda));
}

void BM_CountNonNesting_Parallel(benchmark::State& state) {
  const auto& lambda = composition_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(par::count_non_nesting(lambda));
  state.counters["threads"] = par::max_threads();
}

void BM_CoherenceCensus_Serial(benchmark::State& state) {
  const auto& lambda = composition_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::coherence_census(lambda).disagreements);
}

void BM_CoherenceCensus_Parallel(benchmark::State& state) {
  const auto& lambda = composition_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(par::coherence_census(lambda).disagreements);
  state.counters["threads"] = par::max_threads();
}

void BM_CertifiedVertices_Serial(benchmark::State& state) {
  const auto lambda = Composition::parse(state.range(0) == 0 ? "2,2,2" : "3,2,2");
  for (auto _ : state) benchmark::DoNotOptimize(serial::certified_vertices(lambda));
}

void BM_CertifiedVertices_Parallel(benchmark::State& state) {
  const auto lambda = Composition::parse(state.range(0) == 0 ? "2,2,2" : "3,2,2");
  for (auto _ : state) benchmark::DoNotOptimize(par::certified_vertices(lambda));
  state.counters["threads"] = par::max_threads();
}

void BM_FieldCount_Serial(benchmark::State& state) {
  const auto lambda = Composition::parse("2,2,1");
  const auto q = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial::field_count(lambda, q));
}

void BM_FieldCount_Parallel(benchmark::State& state) {
  const auto lambda = Composition::parse("2,2,1");
  const auto q = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(par::field_count(lambda, q));
  state.counters["threads"] = par::max_threads();
}

}  // namespace

BENCHMARK(BM_CountNonNesting_Serial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountNonNesting_Parallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoherenceCensus_Serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoherenceCensus_Parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifiedVertices_Serial)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifiedVertices_Parallel)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FieldCount_Serial)->Arg(23)->Arg(53)->Arg(97)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FieldCount_Parallel)->Arg(23)->Arg(53)->Arg(97)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
