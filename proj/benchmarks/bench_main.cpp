#include <benchmark/benchmark.h>

#include "alcovekit/alcove.hpp"
#include "alcovekit/ideals.hpp"
#include "alcovekit/series.hpp"
#include "alcovekit/typea.hpp"
#include "alcovekit/wedge.hpp"

using namespace alcovekit;

namespace {

void BM_EulerPower(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(euler_power(248, order));
}
BENCHMARK(BM_EulerPower)->Arg(15)->Arg(30)->Arg(60);

void BM_AlcoveCoeffsA4(benchmark::State& state) {
  auto rs = RootSystem::build(Family::A, 4);
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(alcove_coeffs(rs, order));
}
BENCHMARK(BM_AlcoveCoeffsA4)->Arg(8)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_EnumerateDominant(benchmark::State& state) {
  auto rs = RootSystem::build(Family::D, 4);
  const int len = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_dominant(rs, len));
}
BENCHMARK(BM_EnumerateDominant)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_AbelianIdeals(benchmark::State& state) {
  auto rs = RootSystem::build(Family::E, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_abelian_ideals(rs));
}
BENCHMARK(BM_AbelianIdeals)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_FPolys(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(f_polys(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_FPolys)->Arg(20)->Arg(50);

void BM_WedgeEigenspaceG2(benchmark::State& state) {
  auto rs = RootSystem::build(Family::G, 2);
  auto table = LieAlgebraTable::build(rs);
  WedgeOracle oracle(table);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle.casimir_eigenspace_dim(k));
}
BENCHMARK(BM_WedgeEigenspaceG2)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_NullCoreCount(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_null_cores(static_cast<int>(state.range(0)), 3));
}
BENCHMARK(BM_NullCoreCount)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
