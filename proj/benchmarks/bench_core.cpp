#include <benchmark/benchmark.h>

#include "degenkit/arrangement.hpp"
#include "degenkit/degeneration.hpp"
#include "degenkit/toric_model.hpp"

namespace {

namespace gr = degenkit::grothring;
namespace tl = degenkit::toriclat;
namespace dg = degenkit::degeneration;

void BM_ArrangementClosed(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gr::arrangement_class_closed(r, r));
}
BENCHMARK(BM_ArrangementClosed)->Arg(8)->Arg(16)->Arg(30);

void BM_ArrangementRecursive(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gr::arrangement_class_recursive(r, r));
}
BENCHMARK(BM_ArrangementRecursive)->Arg(8)->Arg(16)->Arg(30);

void BM_ArrangementInclusionExclusion(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gr::arrangement_class_inclusion_exclusion(r, 12));
}
BENCHMARK(BM_ArrangementInclusionExclusion)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_DualModelCone(benchmark::State& state) {
  const tl::Cone sigma = tl::model_cone(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tl::dual_cone(sigma));
}
BENCHMARK(BM_DualModelCone)->DenseRange(2, 8, 3);

void BM_CheckPartition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const tl::Fan fan = tl::model_subdivision(n);
  const tl::Cone sigma = tl::model_cone(n);
  for (auto _ : state) benchmark::DoNotOptimize(tl::check_partition(fan, sigma, 4));
}
BENCHMARK(BM_CheckPartition)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_FullReport(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dg::full_degeneration_report({n, n + 1}));
}
BENCHMARK(BM_FullReport)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
