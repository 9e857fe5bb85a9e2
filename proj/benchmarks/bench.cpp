#include <benchmark/benchmark.h>

#include "hcn/gauss.hpp"
#include "hcn/hurwitz.hpp"
#include "hcn/moments.hpp"
#include "hcn/qseries.hpp"

namespace {

void BM_HurwitzTableBuild(benchmark::State& state) {
  const std::int64_t max_n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hcn::HurwitzTable::build(max_n));
  }
  state.SetComplexityN(max_n);
}
BENCHMARK(BM_HurwitzTableBuild)->Range(1 << 12, 1 << 20)->Complexity();

void BM_HurwitzPerN(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hcn::hurwitz_class_number(n));
  }
}
BENCHMARK(BM_HurwitzPerN)->Arg(10007)->Arg(100003);

void BM_EtaQuotient(benchmark::State& state) {
  const std::int64_t prec = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hcn::eta_quotient_pow8_v3(prec));
  }
  state.SetComplexityN(prec);
}
BENCHMARK(BM_EtaQuotient)->Range(1 << 9, 1 << 14)->Complexity();

void BM_BracketGSeries(benchmark::State& state) {
  const std::int64_t prec = state.range(0);
  const hcn::HurwitzTable table = hcn::HurwitzTable::build(4 * prec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hcn::bracket_g_series(1, 0, 3, prec, table));
  }
}
BENCHMARK(BM_BracketGSeries)->Arg(128)->Arg(512);

void BM_MomentBrute(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const hcn::HurwitzTable table = hcn::HurwitzTable::build(4 * n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hcn::moment_brute(hcn::MomentQuery(2, 1, 3, n), table));
  }
}
BENCHMARK(BM_MomentBrute)->Arg(2000)->Arg(20000);

void BM_GaussClosed(benchmark::State& state) {
  std::int64_t c = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hcn::gauss_closed(7, 5, 720 + c));
    c = (c + 1) & 255;
  }
}
BENCHMARK(BM_GaussClosed);

void BM_GaussBrute(benchmark::State& state) {
  const std::int64_t c = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hcn::gauss_brute(7, 5, c));
  }
}
BENCHMARK(BM_GaussBrute)->Arg(60)->Arg(720);

}  // namespace

BENCHMARK_MAIN();
