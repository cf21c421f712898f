// Serial reference kernels against their OpenMP versions on quadrangle point
// graphs. Run with --benchmark_filter to pick one kernel.

#include <benchmark/benchmark.h>

#include <map>

#include "gqt/formulas.hpp"
#include "gqt/kernels.hpp"
#include "gqt/registry.hpp"

namespace {

using namespace gqt;

const Graph& graph(const std::string& name, bool dual) {
  static std::map<std::pair<std::string, bool>, Graph> cache;
  auto it = cache.find({name, dual});
  if (it == cache.end()) it = cache.emplace(std::pair{name, dual}, point_graph(build_construction(name, dual).gq)).first;
  return it->second;
}

std::vector<Edge> all_pairs(const Graph& g) {
  std::vector<Edge> out;
  for (Vertex x = 0; x < g.order(); ++x)
    for (Vertex y = x + 1; y < g.order(); ++y) out.push_back({x, y});
  return out;
}

std::vector<Edge> pairs_of_class(const Graph& g, bool adjacent, std::size_t limit) {
  std::vector<Edge> out;
  for (auto p : all_pairs(g))
    if (g.adjacent(p.first, p.second) == adjacent && out.size() < limit) out.push_back(p);
  return out;
}

// Arg 0: serial reference; arg n > 0: OpenMP with n threads.
void BM_CommonNeighbors(benchmark::State& state) {
  const Graph& g = graph("payne", true);
  const auto pairs = all_pairs(g);
  for (auto _ : state) {
    auto r = state.range(0) == 0 ? common_neighbor_counts_serial(g, pairs)
                                 : common_neighbor_counts(g, pairs, Exec{static_cast<int>(state.range(0))});
    benchmark::DoNotOptimize(r.data());
  }
  state.SetItemsProcessed(state.iterations() * pairs.size());
}

void BM_Fingerprints(benchmark::State& state) {
  const Graph& g = graph("q5_2", false);
  const TypeTable& table = TypeTable::get(6);
  const auto pairs = all_pairs(g);
  for (auto _ : state) {
    auto r = state.range(0) == 0 ? fingerprints_serial(g, table, pairs)
                                 : fingerprints(g, table, pairs, Exec{static_cast<int>(state.range(0))});
    benchmark::DoNotOptimize(r.data());
  }
  state.SetItemsProcessed(state.iterations() * pairs.size());
}

void BM_AnchoredCounts(benchmark::State& state) {
  const Graph& g = graph("t2star", true);
  const GraphType ty = formula_type(FormulaId::parse("type3a"), true);
  const EmbedPlan plan = EmbedPlan::make(ty.base);
  const auto pairs = pairs_of_class(g, true, 2000);
  for (auto _ : state) {
    auto r = state.range(0) == 0 ? anchored_counts_serial(g, plan, pairs)
                                 : anchored_counts(g, plan, pairs, Exec{static_cast<int>(state.range(0))});
    benchmark::DoNotOptimize(r.data());
  }
  state.SetItemsProcessed(state.iterations() * pairs.size());
}

void BM_K44Counts(benchmark::State& state) {
  const Graph& g = graph("payne", true);
  auto edges = g.edges();
  edges.resize(64);
  for (auto _ : state) {
    auto r = state.range(0) == 0 ? k44_counts_serial(g, edges)
                                 : k44_counts(g, edges, Exec{static_cast<int>(state.range(0))});
    benchmark::DoNotOptimize(r.data());
  }
  state.SetItemsProcessed(state.iterations() * edges.size());
}

void thread_args(benchmark::internal::Benchmark* b) {
  b->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
}

BENCHMARK(BM_CommonNeighbors)->Apply(thread_args);
BENCHMARK(BM_Fingerprints)->Apply(thread_args);
BENCHMARK(BM_AnchoredCounts)->Apply(thread_args);
BENCHMARK(BM_K44Counts)->Apply(thread_args);

}  // namespace

BENCHMARK_MAIN();
