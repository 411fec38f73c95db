#include <tubal/factor.hpp>
#include <tubal/fourier.hpp>
#include <tubal/metrics.hpp>
#include <tubal/random.hpp>
#include <tubal/sketch.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace tubal;

void BM_Tprod(benchmark::State& state) {
  const Index n = state.range(0);
  const Tensor3 x = gaussian_tensor(n, n, n, 1);
  const Tensor3 y = gaussian_tensor(n, n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(tprod(x, y));
}
BENCHMARK(BM_Tprod)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_Tsvd(benchmark::State& state) {
  const Index n = state.range(0);
  const Tensor3 x = gaussian_tensor(n, n, n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(tsvd(x));
}
BENCHMARK(BM_Tsvd)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

SketchParams bench_params(Index n, BasisTruncation truncation) {
  return {.rank = n / 4, .oversample = 5, .power = 2, .seed = 0, .truncation = truncation};
}

void BM_PowerTsvd(benchmark::State& state) {
  const Index n = state.range(0);
  const Tensor3 x = synthetic_case(n, SpectrumCase::inverse_fifth);
  const SketchParams p = bench_params(n, BasisTruncation::full);
  for (auto _ : state) benchmark::DoNotOptimize(randomized_tsvd_power(x, p));
}
BENCHMARK(BM_PowerTsvd)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_BlockKrylovTsvd(benchmark::State& state) {
  const Index n = state.range(0);
  const auto truncation = state.range(1) == 0 ? BasisTruncation::full : BasisTruncation::leading;
  const Tensor3 x = synthetic_case(n, SpectrumCase::inverse_fifth);
  const SketchParams p = bench_params(n, truncation);
  for (auto _ : state) benchmark::DoNotOptimize(randomized_tsvd_block_krylov(x, p));
}
BENCHMARK(BM_BlockKrylovTsvd)
    ->ArgsProduct({{32, 64}, {0, 1}})
    ->ArgNames({"n", "leading"})
    ->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
