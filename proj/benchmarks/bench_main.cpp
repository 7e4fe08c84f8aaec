#include <benchmark/benchmark.h>

#include <lag2/cf_text.hpp>
#include <lag2/continued_fraction.hpp>
#include <lag2/oracle.hpp>
#include <lag2/patterns.hpp>
#include <lag2/spectra.hpp>
#include <lag2/surd.hpp>

#include <utility>
#include <vector>

using namespace lag2;

static void BM_Continuant(benchmark::State& state) {
  std::vector<Quotient> entries;
  for (int64_t i = 0; i < state.range(0); ++i) entries.push_back(i % 3 == 0 ? 3 : 1);
  const Word word(std::move(entries));
  for (auto _ : state) benchmark::DoNotOptimize(continuant(word));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Continuant)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

static void BM_SurdCompare(benchmark::State& state) {
  const QuadraticSurd a = lambda_infinity();
  const QuadraticSurd b = lambda_n(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(a < b);
}
BENCHMARK(BM_SurdCompare)->Arg(3)->Arg(8)->Arg(16);

static void BM_Decimal(benchmark::State& state) {
  const QuadraticSurd x = lambda_infinity();
  for (auto _ : state) benchmark::DoNotOptimize(decimal(x, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_Decimal)->Arg(6)->Arg(100)->Arg(1000);

static void BM_Lambda2(benchmark::State& state) {
  const PeriodicCF cf = xi(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lambda2(cf));
}
BENCHMARK(BM_Lambda2)->Arg(3)->Arg(6)->Arg(10);

static void BM_SurdToCf(benchmark::State& state) {
  const QuadraticSurd x = cf_to_surd(xi(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(surd_to_cf(x));
}
BENCHMARK(BM_SurdToCf)->Arg(3)->Arg(10);

static void BM_Psi2Oracle(benchmark::State& state) {
  const PeriodicCF cf = parse_cf("[2;(1,1,3)*]");
  for (auto _ : state) benchmark::DoNotOptimize(psi2_oracle(cf, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_Psi2Oracle)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_Scan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(scan(static_cast<int>(state.range(0)), 3));
}
BENCHMARK(BM_Scan)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_Lemma4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_lemma4(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Lemma4)->Arg(4)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
