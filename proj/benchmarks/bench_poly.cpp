#include <benchmark/benchmark.h>

#include <random>

#include "qtrunc/laurent_poly.hpp"

namespace {

using qtrunc::LaurentPoly;
using qtrunc::Rational;

LaurentPoly dense(long length, long magnitude, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-magnitude, magnitude);
  std::vector<LaurentPoly::Term> terms;
  for (long e = 0; e < length; ++e) terms.emplace_back(e, Rational(coeff(rng)));
  return LaurentPoly::from_terms(terms);
}

// Below the packing threshold both factors take the schoolbook loop.
void BM_MulDenseSmall(benchmark::State& state) {
  const LaurentPoly a = dense(state.range(0), 1000, 1);
  const LaurentPoly b = dense(state.range(0), 1000, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MulDenseSmall)->RangeMultiplier(2)->Range(4, 16)->Complexity();

// Long dense integer factors are multiplied through one big-integer product.
void BM_MulDenseLarge(benchmark::State& state) {
  const LaurentPoly a = dense(state.range(0), 1000000, 3);
  const LaurentPoly b = dense(state.range(0), 1000000, 4);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MulDenseLarge)->RangeMultiplier(4)->Range(32, 2048)->Complexity();

void BM_MulByBinomial(benchmark::State& state) {
  const LaurentPoly a = dense(state.range(0), 1000, 5);
  const LaurentPoly b = LaurentPoly::one_minus(Rational(1), 7);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_MulByBinomial)->RangeMultiplier(4)->Range(64, 4096);

void BM_DivExact(benchmark::State& state) {
  const LaurentPoly a = dense(state.range(0), 1000, 6) + LaurentPoly(Rational(1));
  const LaurentPoly b = dense(state.range(0), 1000, 7) + LaurentPoly::q_power(state.range(0));
  const LaurentPoly product = a * b;
  for (auto _ : state) benchmark::DoNotOptimize(qtrunc::divexact(product, b));
}
BENCHMARK(BM_DivExact)->RangeMultiplier(4)->Range(8, 512);

void BM_Gcd(benchmark::State& state) {
  const LaurentPoly common = dense(state.range(0), 20, 8) + LaurentPoly::q_power(state.range(0));
  const LaurentPoly a = common * (dense(8, 20, 9) + LaurentPoly::q_power(8));
  const LaurentPoly b = common * (dense(8, 20, 10) + LaurentPoly::q_power(9));
  for (auto _ : state) benchmark::DoNotOptimize(qtrunc::gcd(a, b));
}
BENCHMARK(BM_Gcd)->RangeMultiplier(2)->Range(4, 32);

}  // namespace

BENCHMARK_MAIN();
