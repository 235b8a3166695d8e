#include <benchmark/benchmark.h>

#include <map>

#include "mtc/kernels.hpp"
#include "mtc/specialforms.hpp"
#include "mtc/weilrep.hpp"

using namespace mtc;

namespace {

// Dense operands with field coefficients: N(1/5) and θ-type products.
const QSeries& lhs(int bound) {
  static std::map<int, QSeries> cache;
  auto it = cache.find(bound);
  if (it == cache.end()) it = cache.emplace(bound, N_series(1, QExponent(bound))).first;
  return it->second;
}

const QSeries& rhs(int bound) {
  static std::map<int, QSeries> cache;
  auto it = cache.find(bound);
  if (it == cache.end()) it = cache.emplace(bound, rogers_ramanujan('g', QExponent(1), QExponent(bound))).first;
  return it->second;
}

void BM_series_product_serial(benchmark::State& state) {
  const int b = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::series_product_serial(lhs(b).terms(), rhs(b).terms(), QExponent(b)));
}

void BM_series_product_parallel(benchmark::State& state) {
  const int b = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::series_product_parallel(lhs(b).terms(), rhs(b).terms(), QExponent(b)));
}

void BM_matmul_serial(benchmark::State& state) {
  const WeilMatrix s = rho_S(), t = rho_T();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::matmul_serial(s.entries, t.entries));
}

void BM_matmul_parallel(benchmark::State& state) {
  const WeilMatrix s = rho_S(), t = rho_T();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::matmul_parallel(s.entries, t.entries));
}

}  // namespace

BENCHMARK(BM_series_product_serial)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_series_product_parallel)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_matmul_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_matmul_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
