#include <benchmark/benchmark.h>

#include <filesystem>

#include "qtrunc/catalog.hpp"
#include "qtrunc/multisum.hpp"
#include "qtrunc/qcomb.hpp"
#include "qtrunc/qdsl/eval.hpp"
#include "qtrunc/qdsl/qid_file.hpp"
#include "qtrunc/truncated_series.hpp"

namespace {

void BM_CatalogAllAt(benchmark::State& state) {
  const long p = state.range(0);
  for (auto _ : state) {
    qtrunc::qcomb_clear_caches();
    for (const auto& e : qtrunc::catalog().entries()) {
      if (e.kind == qtrunc::IdentityKind::Series || p < e.param_min) continue;
      benchmark::DoNotOptimize(e.holds_at(p));
    }
  }
}
BENCHMARK(BM_CatalogAllAt)->DenseRange(10, 40, 10)->Unit(benchmark::kMillisecond);

void BM_MultisumU(benchmark::State& state) {
  const long m = state.range(0);
  for (auto _ : state) {
    qtrunc::qcomb_clear_caches();
    benchmark::DoNotOptimize(qtrunc::um(m, 4));
  }
}
BENCHMARK(BM_MultisumU)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_MultisumW(benchmark::State& state) {
  for (auto _ : state) {
    qtrunc::qcomb_clear_caches();
    benchmark::DoNotOptimize(qtrunc::wm(3, state.range(0)));
  }
}
BENCHMARK(BM_MultisumW)->DenseRange(1, 8)->Unit(benchmark::kMillisecond);

void BM_GzMultisum(benchmark::State& state) {
  for (auto _ : state) {
    qtrunc::qcomb_clear_caches();
    benchmark::DoNotOptimize(qtrunc::gz_multisum(qtrunc::GzKind::Pent1, state.range(0), 5));
  }
}
BENCHMARK(BM_GzMultisum)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_SeriesInverse(benchmark::State& state) {
  const auto eta = qtrunc::euler_product(-1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qtrunc::inverse(eta));
}
BENCHMARK(BM_SeriesInverse)->RangeMultiplier(2)->Range(32, 512);

void BM_DslCorpusFile(benchmark::State& state) {
  const auto file = qtrunc::qdsl::load_qid(std::filesystem::path(QTRUNC_BENCH_CORPUS_DIR) / "liu_t1.qid");
  const qtrunc::qdsl::Bindings b{{file.param, state.range(0)}};
  for (auto _ : state) {
    qtrunc::qcomb_clear_caches();
    benchmark::DoNotOptimize(qtrunc::qdsl::eval(file.lhs, b));
  }
}
BENCHMARK(BM_DslCorpusFile)->DenseRange(4, 16, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
