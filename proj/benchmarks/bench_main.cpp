#include <benchmark/benchmark.h>

#include "mould/constructions.hpp"
#include "mould/dshuffle.hpp"
#include "mould/flexion.hpp"
#include "mould/random.hpp"

using namespace mould;

namespace {

RandomShape shape(int maxlen, int factors) {
  RandomShape s;
  s.maxlen = maxlen;
  s.max_factors = factors;
  return s;
}

void BM_RatFunSum(benchmark::State& state) {
  Rng rng(42);
  std::vector<RatFun> terms;
  for (int i = 0; i < state.range(0); ++i) terms.push_back(gen_random_component(rng, 4, shape(4, 2)));
  for (auto _ : state) benchmark::DoNotOptimize(sum(terms));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RatFunSum)->RangeMultiplier(4)->Range(4, 256);

void BM_Ari(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Bimould a = gen_random_bimould(1, shape(n, 1));
  Bimould b = gen_random_bimould(2, shape(n, 1));
  for (auto _ : state) benchmark::DoNotOptimize(ari(a, b));
}
BENCHMARK(BM_Ari)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_IharaBracket(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomShape s = shape(n, 1);
  s.layer = Layer::u_const;
  Bimould f = gen_random_bimould(3, s);
  Bimould g = gen_random_bimould(4, s);
  for (auto _ : state) benchmark::DoNotOptimize(ihara_bracket(f, g));
}
BENCHMARK(BM_IharaBracket)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_ChiB(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Bimould f = Bimould::single(1, RatFun::variable(x_var(1)).pow(2), n, Layer::u_const);
  for (auto _ : state) benchmark::DoNotOptimize(chi_B(f, n));
}
BENCHMARK(BM_ChiB)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_AdariDiriPar(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Bimould f = Bimould::single(1, RatFun::variable(x_var(1)).pow(2), n, Layer::u_const);
  Bimould d = diri_par(n);
  Bimould b = swap(anti(f));
  for (auto _ : state) benchmark::DoNotOptimize(adari_dilator(d, b, SeriesSide::right, n));
}
BENCHMARK(BM_AdariDiriPar)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_IsDsPsi0(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Bimould p = psi0(n);
  for (auto _ : state) benchmark::DoNotOptimize(is_ds(p, n));
}
BENCHMARK(BM_IsDsPsi0)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_DilatorSeriesTrial(benchmark::State& state) {
  RandomShape sl = shape(2, 1);
  Bimould small = gen_random_bimould(5, sl);
  Bimould l(4);
  l.set(1, small[1]);
  l.set(2, small[2]);
  Bimould b = gen_random_bimould(6, shape(4, 1));
  for (auto _ : state) {
    Bimould d = dilator_of(expari(l, 4), 4);
    benchmark::DoNotOptimize(adari_dilator(d, b, SeriesSide::left, 4));
  }
}
BENCHMARK(BM_DilatorSeriesTrial)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
