#include <benchmark/benchmark.h>

#include "folkman/arrowing.hpp"
#include "folkman/constructions.hpp"
#include "folkman/enumerate.hpp"
#include "folkman/family.hpp"
#include "folkman/invariants.hpp"
#include "folkman/structure.hpp"

namespace {

using namespace folkman;

void BM_ChromaticKeryFamily(benchmark::State& state) {
  const Graph g = build_family(kery_family(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g));
}
BENCHMARK(BM_ChromaticKeryFamily)->DenseRange(0, 5);

void BM_ChromaticTripleC5(benchmark::State& state) {
  const Graph g = build_family(triple_c5_family(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g));
}
BENCHMARK(BM_ChromaticTripleC5)->DenseRange(0, 5);

void BM_CliqueQ(benchmark::State& state) {
  const Graph g = kery_q();
  for (auto _ : state) benchmark::DoNotOptimize(clique_number(g));
}
BENCHMARK(BM_CliqueQ);

void BM_Report(benchmark::State& state) {
  const Graph g = build_family("K5+Q");
  for (auto _ : state) benchmark::DoNotOptimize(report(g));
}
BENCHMARK(BM_Report);

void BM_Classify(benchmark::State& state) {
  const Graph g = build_family("K5+C5+C5+C5");
  for (auto _ : state) benchmark::DoNotOptimize(classify_extremal(g));
}
BENCHMARK(BM_Classify);

void BM_ArrowsK9(benchmark::State& state) {
  const ArrowingInstance inst{complete(9), {3, 4}};
  for (auto _ : state) benchmark::DoNotOptimize(arrows(inst));
}
BENCHMARK(BM_ArrowsK9)->Unit(benchmark::kMillisecond);

void BM_ArrowsK8(benchmark::State& state) {
  const ArrowingInstance inst{complete(8), {3, 4}};
  for (auto _ : state) benchmark::DoNotOptimize(arrows(inst));
}
BENCHMARK(BM_ArrowsK8)->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_graphs(n));
}
BENCHMARK(BM_Enumerate)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
