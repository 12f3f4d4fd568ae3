#include <benchmark/benchmark.h>

#include "crankforge/congruence.hpp"
#include "crankforge/cyclotomic.hpp"
#include "crankforge/partitions.hpp"
#include "crankforge/product.hpp"

using namespace crankforge;

static void BM_ExpandExactJ2(benchmark::State& state) {
  const auto spec = build_crank_spec_j2(static_cast<int>(state.range(0)), 0);
  for (auto _ : state) benchmark::DoNotOptimize(expand_product(spec.product, static_cast<int>(state.range(1))));
}
BENCHMARK(BM_ExpandExactJ2)->Args({5, 100})->Args({5, 200})->Args({7, 200})->Unit(benchmark::kMillisecond);

static void BM_ExpandModPhiJ2(benchmark::State& state) {
  const int ell = static_cast<int>(state.range(0));
  const auto spec = build_crank_spec_j2(ell, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(expand_product_mod_phi(spec.product, ell, static_cast<int>(state.range(1))));
  }
}
BENCHMARK(BM_ExpandModPhiJ2)->Args({5, 100})->Args({5, 200})->Args({7, 200})->Unit(benchmark::kMillisecond);

static void BM_VerifyJ3(benchmark::State& state) {
  const auto spec = build_crank_spec_j3(7, 0);
  for (auto _ : state) benchmark::DoNotOptimize(verify_congruence(spec, 1, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_VerifyJ3)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_PkjCounts(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pkj_counts(4, 2, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PkjCounts)->Arg(500)->Arg(2000);

static void BM_ReduceModPhi(benchmark::State& state) {
  const auto poly = expand_product(build_crank_spec_j2(7, 0).product, 150)[150];
  for (auto _ : state) benchmark::DoNotOptimize(reduce_mod_phi(poly, 7));
}
BENCHMARK(BM_ReduceModPhi);

static void BM_Scan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(scan_congruences(1, 0, 11, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Scan)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
