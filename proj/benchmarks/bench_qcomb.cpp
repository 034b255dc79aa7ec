#include <benchmark/benchmark.h>

#include "qtrunc/qcomb.hpp"

namespace {

void BM_QbinomCold(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    qtrunc::qcomb_clear_caches();
    benchmark::DoNotOptimize(qtrunc::qbinom(n, n / 2));
  }
}
BENCHMARK(BM_QbinomCold)->RangeMultiplier(2)->Range(8, 128);

void BM_QbinomCached(benchmark::State& state) {
  const long n = state.range(0);
  qtrunc::qcomb_clear_caches();
  (void)qtrunc::qbinom(n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(qtrunc::qbinom(n, n / 2));
}
BENCHMARK(BM_QbinomCached)->RangeMultiplier(2)->Range(8, 128);

void BM_QbinomRow(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    qtrunc::qcomb_clear_caches();
    for (long m = 0; m <= n; ++m) benchmark::DoNotOptimize(qtrunc::qbinom(n, m));
  }
}
BENCHMARK(BM_QbinomRow)->RangeMultiplier(2)->Range(8, 64);

void BM_QpochNegativeLength(benchmark::State& state) {
  for (auto _ : state) {
    qtrunc::qcomb_clear_caches();
    benchmark::DoNotOptimize(qtrunc::qpoch(qtrunc::MonomialBase::minus_q(), -state.range(0)));
  }
}
BENCHMARK(BM_QpochNegativeLength)->RangeMultiplier(2)->Range(4, 32);

void BM_InversionLaw(benchmark::State& state) {
  for (auto _ : state) {
    qtrunc::qcomb_clear_caches();
    benchmark::DoNotOptimize(qtrunc::qbinom_qinv_law(state.range(0), state.range(0) / 3).holds());
  }
}
BENCHMARK(BM_InversionLaw)->RangeMultiplier(2)->Range(8, 32);

}  // namespace

BENCHMARK_MAIN();
