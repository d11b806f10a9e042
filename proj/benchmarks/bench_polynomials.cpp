#include <benchmark/benchmark.h>

#include "mutarc/grid.hpp"
#include "mutarc/jones.hpp"
#include "mutarc/kauffman.hpp"
#include "mutarc/montesinos.hpp"

using namespace mutarc;

namespace {

// args: theorem, n
void BM_Lambda(benchmark::State& state) {
  const Diagram d = build_diagram(family(static_cast<int>(state.range(0)), 0, static_cast<int>(state.range(1))));
  for (auto _ : state) benchmark::DoNotOptimize(lambda(d));
  state.counters["crossings"] = d.crossing_count();
}
BENCHMARK(BM_Lambda)->ArgsProduct({{1, 5}, {0, 1, 2, 3}})->Unit(benchmark::kMillisecond);

void BM_LambdaNoMemo(benchmark::State& state) {
  const Diagram d = build_diagram(family(static_cast<int>(state.range(0)), 0, static_cast<int>(state.range(1))));
  SkeinConfig cfg;
  cfg.memo_enabled = false;
  cfg.bigon_moves = false;
  cfg.strategy = SkeinStrategy::FirstBad;
  for (auto _ : state) benchmark::DoNotOptimize(lambda(d, cfg));
  state.counters["crossings"] = d.crossing_count();
}
BENCHMARK(BM_LambdaNoMemo)->Args({1, 0})->Args({5, 0})->Unit(benchmark::kMillisecond);

void BM_Jones(benchmark::State& state) {
  const Diagram d = build_diagram(family(static_cast<int>(state.range(0)), 0, static_cast<int>(state.range(1))));
  for (auto _ : state) benchmark::DoNotOptimize(jones(d));
  state.counters["crossings"] = d.crossing_count();
}
BENCHMARK(BM_Jones)->ArgsProduct({{1, 5}, {0, 1, 2}})->Unit(benchmark::kMillisecond);

// F of the grid template; the grid diagrams have far more crossings than
// the Montesinos ones.
void BM_TemplateF(benchmark::State& state) {
  const Diagram d = grid_to_diagram(family_template(static_cast<int>(state.range(0)), 0, static_cast<int>(state.range(1))));
  SkeinConfig cfg;
  cfg.max_crossings = 4000;
  for (auto _ : state) benchmark::DoNotOptimize(kauffman_f(d, cfg));
  state.counters["crossings"] = d.crossing_count();
}
BENCHMARK(BM_TemplateF)->ArgsProduct({{1, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  const MontesinosSpec a = family(7, 0, 2), b = family(7, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(classify_equal(a, b));
}
BENCHMARK(BM_Classify);

}  // namespace

BENCHMARK_MAIN();
