#include <benchmark/benchmark.h>

#include <map>
#include <random>
#include <sstream>
#include <utility>
#include <vector>

#include "routesim/routesim.hpp"

using namespace routesim;

namespace {

// Benchmarks share graphs; generation cost is measured separately below.
const Topology& ba(std::size_t nodes) {
  static std::map<std::size_t, Topology> cache;
  auto it = cache.find(nodes);
  if (it == cache.end()) it = cache.emplace(nodes, generate_ba(nodes, 3, 1)).first;
  return it->second;
}

std::vector<std::pair<NodeId, NodeId>> pairs_on(const Topology& t, std::size_t count) {
  std::mt19937_64 rng(7);
  std::vector<std::pair<NodeId, NodeId>> pairs;
  while (pairs.size() < count) {
    auto s = static_cast<NodeId>(uniform_below(rng, t.node_count()));
    auto d = static_cast<NodeId>(uniform_below(rng, t.node_count()));
    if (s != d) pairs.emplace_back(s, d);
  }
  return pairs;
}

void BM_GenerateBa(benchmark::State& state) {
  auto nodes = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto t = generate_ba(nodes, 3, 1);
    benchmark::DoNotOptimize(t.arc_count());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(nodes));
}
BENCHMARK(BM_GenerateBa)->Arg(1 << 10)->Arg(1 << 13)->Arg(1 << 16);

void BM_BfsDistances(benchmark::State& state) {
  const auto& t = ba(static_cast<std::size_t>(state.range(0)));
  NodeId s = 0;
  for (auto _ : state) {
    auto dist = bfs_distances(t, s);
    benchmark::DoNotOptimize(dist.data());
    s = (s + 1) % t.node_count();
  }
}
BENCHMARK(BM_BfsDistances)->Arg(1 << 10)->Arg(1 << 13)->Arg(1 << 16);

void BM_RouteUspm(benchmark::State& state) {
  const auto& t = ba(static_cast<std::size_t>(state.range(0)));
  auto pairs = pairs_on(t, 512);
  std::size_t i = 0;
  for (auto _ : state) {
    auto [s, d] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(route_uspm(t, s, d));
  }
}
BENCHMARK(BM_RouteUspm)->Arg(1 << 10)->Arg(1 << 13)->Arg(1 << 16);

void BM_RouteNdm(benchmark::State& state) {
  const auto& t = ba(static_cast<std::size_t>(state.range(0)));
  auto pairs = pairs_on(t, 512);
  std::size_t i = 0;
  for (auto _ : state) {
    auto [s, d] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(route_ndm(t, s, d));
  }
}
BENCHMARK(BM_RouteNdm)->Arg(1 << 10)->Arg(1 << 13)->Arg(1 << 16);

void BM_RouteLim(benchmark::State& state) {
  const auto& t = ba(static_cast<std::size_t>(state.range(0)));
  auto w = lim_weights(t, 1.0);
  auto pairs = pairs_on(t, 512);
  std::size_t i = 0;
  for (auto _ : state) {
    auto [s, d] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(dijkstra_path(t, w, s, d));
  }
}
BENCHMARK(BM_RouteLim)->Arg(1 << 10)->Arg(1 << 13)->Arg(1 << 16);

void BM_LimWeights(benchmark::State& state) {
  const auto& t = ba(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto w = lim_weights(t, 1.0);
    benchmark::DoNotOptimize(w.arc.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(t.arc_count()));
}
BENCHMARK(BM_LimWeights)->Arg(1 << 10)->Arg(1 << 13)->Arg(1 << 16);

void BM_PfmWeights(benchmark::State& state) {
  const auto& t = ba(static_cast<std::size_t>(state.range(0)));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto w = pfm_weights(t, 1.0, 10.0, static_cast<double>(t.node_count()), seed++);
    benchmark::DoNotOptimize(w.arc.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(t.arc_count()));
}
BENCHMARK(BM_PfmWeights)->Arg(1 << 10)->Arg(1 << 13)->Arg(1 << 16);

void BM_ComputeMetrics(benchmark::State& state) {
  const auto& t = ba(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto m = compute_metrics(t);
    benchmark::DoNotOptimize(m.clustering);
  }
}
BENCHMARK(BM_ComputeMetrics)->Arg(1 << 10)->Arg(1 << 13)->Arg(1 << 16);

void BM_RunExperiment(benchmark::State& state) {
  const auto& t = ba(static_cast<std::size_t>(state.range(0)));
  auto pairs = pairs_on(t, 64);
  ExperimentConfig cfg;
  cfg.model = ModelSpec{ModelKind::lim, 1.0};
  for (auto [s, d] : pairs) {
    cfg.sources.push_back(s);
    cfg.destinations.push_back(d);
  }
  auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    auto r = run_experiment(t, cfg, threads);
    benchmark::DoNotOptimize(r.mean_route_length);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(cfg.sources.size() * cfg.destinations.size()));
}
// wall time, so the thread counts compare against each other
BENCHMARK(BM_RunExperiment)
    ->Args({1 << 13, 1})
    ->Args({1 << 13, 2})
    ->Args({1 << 13, 4})
    ->UseRealTime();

void BM_ParseTraces(benchmark::State& state) {
  const auto& t = ba(static_cast<std::size_t>(state.range(0)));
  auto pairs = pairs_on(t, 2048);
  std::vector<Route> routes;
  for (auto [s, d] : pairs)
    if (auto r = route_uspm(t, s, d)) routes.push_back(std::move(*r));
  std::ostringstream text;
  write_traces(routes, text);
  const std::string body = std::move(text).str();

  for (auto _ : state) {
    std::istringstream in(body);
    auto ds = parse_traces(in);
    benchmark::DoNotOptimize(ds.routes.size());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(routes.size()));
}
BENCHMARK(BM_ParseTraces)->Arg(1 << 13);

}  // namespace

BENCHMARK_MAIN();
