#include <sysgraph/audit.hpp>
#include <sysgraph/bounds.hpp>
#include <sysgraph/generators.hpp>
#include <sysgraph/graph.hpp>
#include <sysgraph/graph6.hpp>
#include <sysgraph/invariants.hpp>
#include <sysgraph/peeling.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace sysgraph;

namespace {

Graph random_graph(int n, double p, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution edge(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

void BM_ParseGraph6(benchmark::State& state) {
  std::string line = to_graph6(random_graph(static_cast<int>(state.range(0)), 0.3, 7));
  for (auto _ : state) benchmark::DoNotOptimize(parse_graph6(line));
}
BENCHMARK(BM_ParseGraph6)->Arg(10)->Arg(100)->Arg(500);

void BM_EncodeGraph6(benchmark::State& state) {
  Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(to_graph6(g));
}
BENCHMARK(BM_EncodeGraph6)->Arg(10)->Arg(100)->Arg(500);

void BM_OddGirth(benchmark::State& state) {
  Graph g = gen_general_mycielski(gen_cycle(2 * static_cast<int>(state.range(0)) + 1),
                                  static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(odd_girth(g));
}
BENCHMARK(BM_OddGirth)->Arg(2)->Arg(4)->Arg(8);

void BM_CanonicalForm(benchmark::State& state) {
  Graph g = random_graph(static_cast<int>(state.range(0)), 0.4, 11);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(6)->Arg(8)->Arg(10);

void BM_ChromaticNumber(benchmark::State& state) {
  Graph g = gen_general_mycielski(gen_cycle(7), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g));
}
BENCHMARK(BM_ChromaticNumber)->Arg(2)->Arg(3);

void BM_Essentiality(benchmark::State& state) {
  Graph g = gen_petersen();
  for (auto _ : state) benchmark::DoNotOptimize(essentiality(g));
}
BENCHMARK(BM_Essentiality);

void BM_BallPeel(benchmark::State& state) {
  Graph g = gen_cycle(2 * static_cast<int>(state.range(0)) + 1);
  int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ball_peel_coloring(g, k));
}
BENCHMARK(BM_BallPeel)->Arg(5)->Arg(25)->Arg(100);

void BM_AuditGraph(benchmark::State& state) {
  Graph g = gen_petersen();
  auto mandatory = default_mandatory_checks();
  auto report_only = default_report_only_checks();
  for (auto _ : state) benchmark::DoNotOptimize(audit_graph(g, mandatory, report_only));
}
BENCHMARK(BM_AuditGraph);

void BM_AuditSweep(benchmark::State& state) {
  AuditConfig config;
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(audit_sweep_enumerate(0, n, config));
}
BENCHMARK(BM_AuditSweep)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_WinnerMatrix(benchmark::State& state) {
  for (auto _ : state) {
    for (int chi = 3; chi <= 15; ++chi)
      for (int k = 2; k <= 10; ++k)
        benchmark::DoNotOptimize(best_bound({chi, k}, table2_catalog));
  }
}
BENCHMARK(BM_WinnerMatrix);

}  // namespace

BENCHMARK_MAIN();
