// Serial reference against the OpenMP kernel for the pairwise cell check.
// Maps come from the synthesizer on theta graphs with edges k, k+1, k+2, so
// the cell count grows linearly in k and the pair count quadratically.

#include <benchmark/benchmark.h>

#include "tropskel/synth.hpp"

using namespace tropskel;

namespace {

TropMap theta_map(long k) {
  auto g = MetricGraph::build({{{"u", 0}, {"v", 0}},
                               {{"e1", "u", "v", Rational(k)}, {"e2", "u", "v", Rational(k + 1)}, {"e3", "u", "v", Rational(k + 2)}},
                               {}});
  auto r = synthesize_faithful(g, 5);
  if (!r.map) throw Error("synthesis failed: " + r.reason);
  return *r.map;
}

void run(benchmark::State& state, bool parallel) {
  TropMap m = theta_map(state.range(0));
  auto cells = cell_decomposition(m);
  for (auto _ : state) {
    auto rep = verify_injective(m.graph(), cells, parallel);
    benchmark::DoNotOptimize(rep.injective);
  }
  state.counters["cells"] = static_cast<double>(cells.size());
  state.counters["threads"] = parallel ? injectivity_threads() : 1;
}

void BM_InjectivitySerial(benchmark::State& state) { run(state, false); }
void BM_InjectivityParallel(benchmark::State& state) { run(state, true); }

}  // namespace

BENCHMARK(BM_InjectivitySerial)->Arg(1)->Arg(4)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InjectivityParallel)->Arg(1)->Arg(4)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
