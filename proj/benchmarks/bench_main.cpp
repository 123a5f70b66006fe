#include <benchmark/benchmark.h>

#include "skeinrep/algebra.hpp"

using namespace skeinrep;

namespace {

void BM_CycloMultiply(benchmark::State& state) {
  auto ctx = CycloContext::make(static_cast<int>(state.range(0)));
  CycloNum x = CycloNum::a_power(ctx, 3) + CycloNum::from_rational(ctx, Rational(5, 7));
  CycloNum y = CycloNum::a_power(ctx, -2) - CycloNum::from_rational(ctx, Rational(2, 3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(x * y);
  }
}
BENCHMARK(BM_CycloMultiply)->Arg(8)->Arg(12);

void BM_CycloInverse(benchmark::State& state) {
  auto ctx = CycloContext::make(12);
  CycloNum x = CycloNum::a_power(ctx, 5) + CycloNum::from_rational(ctx, Rational(3, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(x.inverse());
  }
}
BENCHMARK(BM_CycloInverse);

void BM_JonesWenzl(benchmark::State& state) {
  auto ctx = CycloContext::make(12);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(jones_wenzl(ctx, n));
  }
}
BENCHMARK(BM_JonesWenzl)->Arg(3)->Arg(4)->Arg(5);

void BM_TetOracle(benchmark::State& state) {
  auto ctx = CycloContext::make(12);
  JonesWenzlCache cache(ctx);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        evaluate_network(ctx, tet_network(2, 2, 2, 2, 2, 2, 12), &cache));
  }
}
BENCHMARK(BM_TetOracle);

void BM_RecouplingTable(benchmark::State& state) {
  for (auto _ : state) {
    RecouplingContext rc(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(validate_recoupling(rc, 3));
  }
}
BENCHMARK(BM_RecouplingTable)->Arg(8)->Arg(10);

void BM_PointPushAnalysis(benchmark::State& state) {
  for (auto _ : state) {
    Space sp(SurfaceSpec{0, {1, 1, 1, 1}, 8}, std::make_shared<RecouplingContext>(8));
    benchmark::DoNotOptimize(analyze(sp, GeneratorMode::point_pushing));
  }
}
BENCHMARK(BM_PointPushAnalysis);

}  // namespace

BENCHMARK_MAIN();
