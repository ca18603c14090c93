#include "slagforge/cohomology.hpp"
#include "slagforge/mirror.hpp"
#include "slagforge/parse.hpp"
#include "slagforge/slag.hpp"

#include <benchmark/benchmark.h>

using namespace slagforge;

static void BM_ScalarArithmetic(benchmark::State& st) {
  Scalar l = Scalar::param("lambda"), a = Scalar::rational(3, 7) + l * l;
  for (auto _ : st) benchmark::DoNotOptimize((a * a - l) / (a + Scalar(1)));
}
BENCHMARK(BM_ScalarArithmetic);

static void BM_ExteriorDerivative(benchmark::State& st) {
  ModelManifold m = builtin("nakamura_cs");
  WeightedForm w = wedge(m.omega, m.omega);
  for (auto _ : st) benchmark::DoNotOptimize(d(w, m.frame()));
}
BENCHMARK(BM_ExteriorDerivative);

static void BM_SlagScan(benchmark::State& st) {
  ModelManifold m = builtin("iwasawa");
  for (auto _ : st) benchmark::DoNotOptimize(scan_axis(m, Phase::Zero));
}
BENCHMARK(BM_SlagScan);

static void BM_DeRham(benchmark::State& st) {
  ModelManifold m = builtin("nakamura_cs");
  for (auto _ : st) benchmark::DoNotOptimize(de_rham(m));
}
BENCHMARK(BM_DeRham)->Unit(benchmark::kMillisecond);

static void BM_TsengYau(benchmark::State& st) {
  ModelManifold m = builtin("nakamura_cs_mirror");
  for (auto _ : st) benchmark::DoNotOptimize(refined_tseng_yau(m));
}
BENCHMARK(BM_TsengYau)->Unit(benchmark::kMillisecond);

static void BM_FourierMukai(benchmark::State& st) {
  ModelManifold m = builtin("nakamura_cs");
  for (auto _ : st) benchmark::DoNotOptimize(mirror_omega_flat(m));
}
BENCHMARK(BM_FourierMukai);
BENCHMARK_MAIN();
