#include <benchmark/benchmark.h>

#include "staircase/alpha_grade.hpp"
#include "staircase/hilbert.hpp"
#include "staircase/inequality.hpp"
#include "staircase/pyramid.hpp"
#include "staircase/semi_invariant.hpp"
#include "staircase/standard_form.hpp"

using namespace stair;

static void BM_EnumerateFunctions(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate(st.range(0)));
}
BENCHMARK(BM_EnumerateFunctions)->DenseRange(8, 20, 4);

static void BM_EnumerateIdeals(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_ideals(st.range(0)));
}
BENCHMARK(BM_EnumerateIdeals)->DenseRange(6, 14, 4);

static void BM_TypeChains(benchmark::State& st) {
  const auto fs = enumerate(st.range(0));
  for (auto _ : st)
    for (const auto& f : fs) benchmark::DoNotOptimize(type_of(f));
}
BENCHMARK(BM_TypeChains)->Arg(14)->Arg(18);

static void BM_PyramidOracle(benchmark::State& st) {
  const int c = static_cast<int>(st.range(0));
  for (auto _ : st)
    for (int d = 1; d <= c; ++d) benchmark::DoNotOptimize(brute_force_max_weight(c, d));
}
BENCHMARK(BM_PyramidOracle)->DenseRange(5, 9, 2)->Unit(benchmark::kMillisecond);

static void BM_PyramidSubsetOracle(benchmark::State& st) {
  for (auto _ : st)
    for (int d = 1; d <= 5; ++d) benchmark::DoNotOptimize(brute_force_max_weight(5, d, OracleKind::full_subset));
}
BENCHMARK(BM_PyramidSubsetOracle)->Unit(benchmark::kMillisecond);

static void BM_ClosedForm(benchmark::State& st) {
  for (auto _ : st)
    for (i64 c = 1; c <= 64; ++c)
      for (i64 d = 1; d <= c; ++d) benchmark::DoNotOptimize(max_weight_closed_form(c, d));
}
BENCHMARK(BM_ClosedForm);

static void BM_MinMaxDouble(benchmark::State& st) {
  const auto V = double_deformation_space(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(minmax_alpha_grade(V));
}
BENCHMARK(BM_MinMaxDouble)->Arg(8)->Arg(16);

static void BM_InequalityScan(benchmark::State& st) {
  const auto& info = inequality_catalog()[static_cast<std::size_t>(st.range(0))];
  st.SetLabel(info.name);
  for (auto _ : st) benchmark::DoNotOptimize(inequality_scan(info.name));
}
BENCHMARK(BM_InequalityScan)->DenseRange(0, 14)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
