#include <benchmark/benchmark.h>

#include "ctsum/catalog.hpp"
#include "ctsum/gosper.hpp"
#include "ctsum/partial_fractions.hpp"
#include "ctsum/verify.hpp"

using namespace ctsum;

static void BM_Lhs(benchmark::State& state) {
  const int id = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(lhs(id, n));
}
BENCHMARK(BM_Lhs)->Args({3, 50})->Args({7, 50})->Args({8, 50});

static void BM_Decompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Family f = build_family(8, n, n + 5);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(f.function, f.poles));
}
BENCHMARK(BM_Decompose)->Arg(2)->Arg(4)->Arg(8);

static void BM_GosperOnWzDifference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FgPair& p = *identity(6).fg;
  const RationalFunction h = wz_difference(p.F, p.relation(n), n);
  const RationalFunction r = kernel_ratio(h);
  for (auto _ : state) benchmark::DoNotOptimize(gosper(r));
}
BENCHMARK(BM_GosperOnWzDifference)->Arg(2)->Arg(5)->Arg(10);

static void BM_WzVerify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FgPair& p = *identity(5).fg;
  for (auto _ : state) benchmark::DoNotOptimize(wz_verify(p.F, p.G, p.relation(n), n));
}
BENCHMARK(BM_WzVerify)->Arg(5)->Arg(20);

static void BM_DualGrid(benchmark::State& state) {
  const DualPair& d = *identity(8).dual;
  for (auto _ : state) {
    for (int n = 0; n <= 10; ++n) {
      for (int j = 0; j <= 25; ++j) benchmark::DoNotOptimize(wz_verify_dual(d.F, d.G, n, j, -1));
    }
  }
}
BENCHMARK(BM_DualGrid)->Unit(benchmark::kMillisecond);

static void BM_VerifyIdentity(benchmark::State& state) {
  const int id = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify(id, 10, default_levels()));
}
BENCHMARK(BM_VerifyIdentity)->Arg(3)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
