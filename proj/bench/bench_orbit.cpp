// Serial reference versus OpenMP kernel for the orbit series, plus the
// Hilbert-table path versus brute-force enumeration for Hom tables.

#include <benchmark/benchmark.h>

#include <vector>

#include "hybrid/ext.hpp"
#include "hybrid/oracle.hpp"
#include "hybrid/serredim.hpp"

namespace {

using hybrid::CompleteIntersectionModel;

CompleteIntersectionModel bench_model() {
  return CompleteIntersectionModel::validate(10, std::vector<std::int64_t>{2, 3, 4});
}

void BM_OrbitSerial(benchmark::State& state) {
  const auto x = bench_model();
  const std::int64_t horizon = state.range(0);
  const auto calc = hybrid::orbit_calculator(x, horizon / 2 + 1, horizon);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hybrid::orbit_series_serial(calc, horizon / 2 + 1, horizon));
  }
}

void BM_OrbitParallel(benchmark::State& state) {
  const auto x = bench_model();
  const std::int64_t horizon = state.range(0);
  const auto calc = hybrid::orbit_calculator(x, horizon / 2 + 1, horizon);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hybrid::orbit_series_parallel(calc, horizon / 2 + 1, horizon));
  }
}

void BM_HomTable(benchmark::State& state) {
  const auto x = CompleteIntersectionModel::validate(7, std::vector<std::int64_t>{2, 2, 3});
  for (auto _ : state) benchmark::DoNotOptimize(hybrid::hom_table(x, 0, state.range(0)));
}

void BM_HomTableOracle(benchmark::State& state) {
  const auto x = CompleteIntersectionModel::validate(7, std::vector<std::int64_t>{2, 2, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(hybrid::oracle::brute_hom_table(x, 0, state.range(0)));
  }
}

}  // namespace

BENCHMARK(BM_OrbitSerial)->Arg(600)->Arg(2400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrbitParallel)->Arg(600)->Arg(2400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HomTable)->Arg(10)->Arg(30);
BENCHMARK(BM_HomTableOracle)->Arg(10)->Arg(30);

BENCHMARK_MAIN();
