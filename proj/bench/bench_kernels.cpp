// Serial reference loops against the OpenMP kernels, plus the numeric series.
//
//   build/bench/hyperpsi_bench --benchmark_filter=Rows

#include <benchmark/benchmark.h>
#include <omp.h>

#include "hyperpsi/combinatorics.hpp"
#include "hyperpsi/numeric_series.hpp"
#include "hyperpsi/tables.hpp"
#include "hyperpsi/verify.hpp"

namespace {

void BM_ClausenRowsSerial(benchmark::State& state) {
  const auto m_max = static_cast<hyperpsi::Nat>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyperpsi::clausen_rows_serial(1, m_max, 30));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ClausenRowsSerial)->Arg(51)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_ClausenRowsParallel(benchmark::State& state) {
  const auto m_max = static_cast<hyperpsi::Nat>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyperpsi::clausen_rows(1, m_max, 30));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = omp_get_max_threads();
}
BENCHMARK(BM_ClausenRowsParallel)->Arg(51)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_DigammaRowsSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyperpsi::digamma_rows_serial(static_cast<hyperpsi::Nat>(state.range(0)), 30));
  }
}
BENCHMARK(BM_DigammaRowsSerial)->Arg(52)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_DigammaRowsParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyperpsi::digamma_rows(static_cast<hyperpsi::Nat>(state.range(0)), 30));
  }
}
BENCHMARK(BM_DigammaRowsParallel)->Arg(52)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_VerifySerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyperpsi::verify_serial(hyperpsi::Identity::numeric_crosscheck, 50, 42));
  }
}
BENCHMARK(BM_VerifySerial)->Unit(benchmark::kMillisecond);

void BM_VerifyParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyperpsi::verify(hyperpsi::Identity::numeric_crosscheck, 50, 42));
  }
}
BENCHMARK(BM_VerifyParallel)->Unit(benchmark::kMillisecond);

void BM_Harmonic(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyperpsi::harmonic(static_cast<hyperpsi::Nat>(state.range(0))));
  }
}
BENCHMARK(BM_Harmonic)->Arg(1000)->Arg(10000);

void BM_HarmonicSplit(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyperpsi::harmonic_split(static_cast<hyperpsi::Nat>(state.range(0))));
  }
}
BENCHMARK(BM_HarmonicSplit)->Arg(1000)->Arg(10000);

void BM_ClausenNumeric(benchmark::State& state) {
  const auto spec = hyperpsi::SeriesSpec::parse("3F2(1,1,51;2,52;1)");
  const auto precision = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyperpsi::pfq_numeric_unit(spec, precision));
  }
}
BENCHMARK(BM_ClausenNumeric)->Arg(10)->Arg(30)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
