#include "routesim/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>

#include "routesim/shortest_path.hpp"

namespace routesim {

Topology merge_routes(std::span<const Route> routes) {
  if (routes.empty()) throw std::invalid_argument("route merge: no routes given");

  std::unordered_map<NodeId, NodeId> remap;
  auto dense = [&remap](NodeId v) {
    auto [it, added] = remap.emplace(v, static_cast<NodeId>(remap.size()));
    return it->second;
  };

  std::vector<Edge> edges;
  for (const auto& r : routes) {
    if (r.nodes.empty()) throw std::invalid_argument("route merge: empty route");
    NodeId prev = dense(r.nodes[0]);
    for (std::size_t i = 1; i < r.nodes.size(); ++i) {
      NodeId cur = dense(r.nodes[i]);
      edges.emplace_back(prev, cur);
      prev = cur;
    }
  }
  if (edges.empty()) throw std::invalid_argument("route merge: no route carries an edge");
  return build_topology(edges, remap.size(), nullptr);
}

Histogram length_distribution(std::span<const Route> routes) {
  std::map<std::size_t, std::size_t> counts;
  for (const auto& r : routes) ++counts[r.hops()];
  return histogram_from_counts(counts);
}

double distribution_distance(const Histogram& p, const Histogram& q) {
  constexpr double kEps = 1e-10;

  std::map<std::size_t, std::pair<double, double>> joint;
  for (const auto& [k, v] : p.bins) joint[k].first = v;
  for (const auto& [k, v] : q.bins) joint[k].second = v;
  if (joint.empty()) throw std::invalid_argument("distribution distance: empty histograms");

  double sp = 0.0, sq = 0.0;
  for (auto& [k, pq] : joint) {
    if (pq.first <= 0.0) pq.first = kEps;
    if (pq.second <= 0.0) pq.second = kEps;
    sp += pq.first;
    sq += pq.second;
  }

  double d = 0.0;
  for (const auto& [k, pq] : joint) {
    double pv = pq.first / sp;
    double qv = pq.second / sq;
    d += pv * std::log(pv / qv);
  }
  return d;
}

HopDegreeProfile hop_degree_profile(std::span<const Route> routes, const Topology& t) {
  if (routes.empty()) throw std::invalid_argument("hop profile: no routes given");

  std::size_t longest = 0;
  for (const auto& r : routes) longest = std::max(longest, r.nodes.size());

  std::vector<std::map<std::size_t, std::size_t>> counts(longest);
  for (const auto& r : routes) {
    for (std::size_t h = 0; h < r.nodes.size(); ++h) {
      NodeId v = r.nodes[h];
      if (v >= t.node_count())
        throw std::invalid_argument("hop profile: route node " + std::to_string(v) +
                                    " is outside the topology");
      ++counts[h][t.degree(v)];
    }
  }

  HopDegreeProfile prof;
  prof.per_hop.reserve(longest);
  prof.entropy.reserve(longest);
  for (const auto& c : counts) {
    prof.per_hop.push_back(histogram_from_counts(c));
    prof.entropy.push_back(entropy(prof.per_hop.back()));
  }
  return prof;
}

namespace {

struct PairBatch {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  // Pairs are source-major, so each source owns one contiguous index range.
  std::vector<NodeId> srcs;
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
};

PairBatch make_pairs(const ExperimentConfig& cfg) {
  PairBatch b;
  for (NodeId s : cfg.sources) {
    std::size_t begin = b.pairs.size();
    for (NodeId d : cfg.destinations) {
      if (s == d) continue;
      b.pairs.emplace_back(s, d);
    }
    if (b.pairs.size() > begin) {
      b.srcs.push_back(s);
      b.ranges.emplace_back(begin, b.pairs.size());
    }
  }
  return b;
}

void route_source_block(const Topology& t, const ExperimentConfig& cfg,
                        const EdgeWeights* w, const PairBatch& batch, std::size_t src_idx,
                        std::vector<std::optional<Route>>& out) {
  NodeId s = batch.srcs[src_idx];
  auto [begin, end] = batch.ranges[src_idx];
  switch (cfg.model.kind) {
    case ModelKind::uspm: {
      auto dist = bfs_distances(t, s);
      for (std::size_t i = begin; i < end; ++i) {
        out[i] = bfs_path_from_distances(t, dist, s, batch.pairs[i].second);
        if (out[i]) out[i]->model = RouteModel::uspm;
      }
      return;
    }
    case ModelKind::ndm: {
      for (std::size_t i = begin; i < end; ++i)
        out[i] = route_ndm(t, s, batch.pairs[i].second);
      return;
    }
    case ModelKind::lim:
    case ModelKind::pfm: {
      auto dist = dijkstra_distances(t, *w, s);
      RouteModel tag = cfg.model.kind == ModelKind::lim ? RouteModel::lim : RouteModel::pfm;
      for (std::size_t i = begin; i < end; ++i) {
        out[i] = dijkstra_path_from_distances(t, *w, dist, s, batch.pairs[i].second);
        if (out[i]) out[i]->model = tag;
      }
      return;
    }
  }
}

void route_all_sources(const Topology& t, const ExperimentConfig& cfg,
                       const EdgeWeights* w, const PairBatch& batch, unsigned threads,
                       std::vector<std::optional<Route>>& out) {
  std::size_t n_src = batch.srcs.size();
  std::size_t n_workers = std::min<std::size_t>(threads ? threads : 1, n_src);
  if (n_workers <= 1) {
    for (std::size_t i = 0; i < n_src; ++i) route_source_block(t, cfg, w, batch, i, out);
    return;
  }

  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(n_workers);
  for (std::size_t k = 0; k < n_workers; ++k) {
    pool.emplace_back([&, k] {
      try {
        for (std::size_t i = k; i < n_src; i += n_workers)
          route_source_block(t, cfg, w, batch, i, out);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

ExperimentResult run_experiment(const Topology& t, const ExperimentConfig& cfg,
                                unsigned threads) {
  if (cfg.sources.empty()) throw std::invalid_argument("experiment: no sources");
  if (cfg.destinations.empty()) throw std::invalid_argument("experiment: no destinations");
  for (NodeId v : cfg.sources)
    if (v >= t.node_count())
      throw std::invalid_argument("experiment: source " + std::to_string(v) +
                                  " is outside the topology");
  for (NodeId v : cfg.destinations)
    if (v >= t.node_count())
      throw std::invalid_argument("experiment: destination " + std::to_string(v) +
                                  " is outside the topology");
  cfg.model.validate(t.node_count());

  PairBatch batch = make_pairs(cfg);
  if (batch.pairs.empty())
    throw std::invalid_argument("experiment: every source equals every destination");

  std::size_t reps = cfg.resolved_repetitions();

  ExperimentResult res;
  res.pair_count = batch.pairs.size();
  res.repetitions_run = reps;

  EdgeWeights lim_w;
  if (cfg.model.kind == ModelKind::lim) lim_w = lim_weights(t, cfg.model.alpha);

  std::map<std::size_t, double> bin_sums;
  for (std::size_t rep = 0; rep < reps; ++rep) {
    EdgeWeights pfm_w;
    const EdgeWeights* w = nullptr;
    if (cfg.model.kind == ModelKind::lim) {
      w = &lim_w;
    } else if (cfg.model.kind == ModelKind::pfm) {
      pfm_w = pfm_weights(t, cfg.model.alpha, cfg.model.pareto_min,
                          cfg.model.resolved_pareto_max(t.node_count()),
                          cfg.base_seed + rep);
      w = &pfm_w;
    }

    std::vector<std::optional<Route>> routed(batch.pairs.size());
    route_all_sources(t, cfg, w, batch, threads, routed);

    std::map<std::size_t, std::size_t> counts;
    for (auto& r : routed) {
      if (!r) {
        if (rep == 0) ++res.unreachable_pairs;
        continue;
      }
      ++counts[r->hops()];
      res.routes.push_back(std::move(*r));
    }
    if (counts.empty())
      throw std::runtime_error("experiment: no destination was reachable from any source");
    Histogram h = histogram_from_counts(counts);
    for (const auto& [k, p] : h.bins) bin_sums[k] += p;
  }

  res.length_distribution.total_count = res.routes.size();
  for (const auto& [k, p] : bin_sums)
    res.length_distribution.bins[k] = p / static_cast<double>(reps);
  res.mean_route_length = res.length_distribution.mean();

  res.sampled_metrics = compute_metrics(merge_routes(res.routes));
  res.profile = hop_degree_profile(res.routes, t);
  return res;
}

std::size_t best_sweep_row(std::span<const SweepRow> rows) {
  if (rows.empty()) throw std::invalid_argument("sweep: no rows");
  std::size_t best = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].distance < rows[best].distance ||
        (rows[i].distance == rows[best].distance && rows[i].alpha < rows[best].alpha))
      best = i;
  }
  return best;
}

SweepTable alpha_sweep(const Topology& t, const ExperimentConfig& cfg,
                       std::span<const double> alphas, const Histogram& reference,
                       unsigned threads) {
  if (alphas.empty()) throw std::invalid_argument("sweep: no alpha values");

  SweepTable table;
  table.rows.reserve(alphas.size());
  for (double a : alphas) {
    ExperimentConfig step = cfg;
    step.model.alpha = a;
    ExperimentResult res = run_experiment(t, step, threads);
    SweepRow row;
    row.alpha = a;
    row.mean_route_length = res.mean_route_length;
    row.distance = distribution_distance(res.length_distribution, reference);
    row.sampled_metrics = res.sampled_metrics;
    row.unreachable_pairs = res.unreachable_pairs;
    table.rows.push_back(row);
  }
  table.best_index = best_sweep_row(table.rows);
  return table;
}

}  // namespace routesim
