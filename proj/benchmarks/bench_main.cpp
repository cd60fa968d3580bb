#include <benchmark/benchmark.h>

#include "alterfold/fs_indicator.hpp"
#include "alterfold/state_sum.hpp"
#include "alterfold/surgery.hpp"
#include "alterfold/tube.hpp"

using namespace alterfold;

static void BM_TvFibonacci(benchmark::State& st) {
  const auto cat = builtin_category("fibonacci");
  const auto tri = census(st.range(0) ? "t3" : "s3_3tet");
  StateSumConfig cfg;
  cfg.workers = 1;
  for (auto _ : st) benchmark::DoNotOptimize(tv_invariant(*cat, tri, cfg));
}
BENCHMARK(BM_TvFibonacci)->Arg(0)->Arg(1);

static void BM_TvSu2Workers(benchmark::State& st) {
  const auto cat = builtin_category("su2_level", {2});
  const auto tri = census("t3");
  StateSumConfig cfg;
  cfg.workers = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(tv_invariant(*cat, tri, cfg));
}
BENCHMARK(BM_TvSu2Workers)->Arg(1)->Arg(4)->UseRealTime();

static void BM_Center(benchmark::State& st) {
  const char* names[] = {"fibonacci", "ising"};
  const auto cat = builtin_category(names[st.range(0)]);
  for (auto _ : st) {
    DrinfeldCenter z(cat);
    benchmark::DoNotOptimize(z.modular_data().s_tilde(0, 0));
  }
}
BENCHMARK(BM_Center)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_CenterSu2Level3(benchmark::State& st) {
  const auto cat = builtin_category("su2_level", {3});
  for (auto _ : st) {
    DrinfeldCenter z(cat);
    benchmark::DoNotOptimize(z.rank());
  }
}
BENCHMARK(BM_CenterSu2Level3)->Unit(benchmark::kMillisecond);

static void BM_RtLens(benchmark::State& st) {
  const auto md = modular_data(builtin_category("ising"));
  const auto g = lens_space_plumbing(static_cast<int>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(rt_plumbing(md, g));
}
BENCHMARK(BM_RtLens)->Arg(7)->Arg(31);

static void BM_Indicator(benchmark::State& st) {
  const DrinfeldCenter z(builtin_category("fibonacci"));
  const int m = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(indicator(z, 3, {1}, m, 1));
}
BENCHMARK(BM_Indicator)->Arg(2)->Arg(4);
BENCHMARK_MAIN();
