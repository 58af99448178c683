#include <benchmark/benchmark.h>

#include "surd/sweep.hpp"

namespace {

surd::sweep::SweepOptions options(benchmark::State& state) {
  surd::sweep::SweepOptions o;
  o.d_max = static_cast<std::uint64_t>(state.range(0));
  o.keep_rows = false;
  return o;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto o = options(state);
  for (auto _ : state) {
    auto rep = surd::sweep::sweep_serial(o);
    benchmark::DoNotOptimize(rep.stats.surds_checked);
  }
}

void BM_SweepParallel(benchmark::State& state) {
  auto o = options(state);
  o.jobs = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto rep = surd::sweep::sweep(o);
    benchmark::DoNotOptimize(rep.stats.surds_checked);
  }
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepParallel)
    ->ArgsProduct({{60, 120}, {1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
