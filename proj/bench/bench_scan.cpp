// Serial reference vs OpenMP column scan on the same work.
//
//   build/bench/bench_scan --benchmark_filter=Grid

#include "commtuples/logconcavity.hpp"

#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

namespace ct = commtuples;

namespace {

std::vector<unsigned> ells(unsigned lo, unsigned hi) {
  std::vector<unsigned> out(hi - lo + 1);
  std::iota(out.begin(), out.end(), lo);
  return out;
}

void BM_GridSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ct::exception_grid_serial(1, 30, 0, 40));
}

void BM_GridParallel(benchmark::State& state) {
  ct::ScanOptions options;
  options.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ct::exception_grid(1, 30, 0, 40, options));
}

// Table 5 style columns: 40 values of ell, n up to range(0).
void BM_ColumnsSerial(benchmark::State& state) {
  const auto n_hi = static_cast<std::size_t>(state.range(0));
  const auto all = ells(1, 40);
  for (auto _ : state) benchmark::DoNotOptimize(ct::scan_columns_serial(all, 1, n_hi));
}

void BM_ColumnsParallel(benchmark::State& state) {
  const auto n_hi = static_cast<std::size_t>(state.range(0));
  ct::ScanOptions options;
  options.workers = static_cast<unsigned>(state.range(1));
  const auto all = ells(1, 40);
  for (auto _ : state) benchmark::DoNotOptimize(ct::scan_columns(all, 1, n_hi, options));
}

}  // namespace

BENCHMARK(BM_GridSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ColumnsSerial)->Arg(150)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ColumnsParallel)
    ->ArgsProduct({{150, 300}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
