#include "routesim/shortest_path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace routesim {

namespace {

constexpr NodeId kNoStop = std::numeric_limits<NodeId>::max();

void check_node(const Topology& t, NodeId v, const char* what) {
  if (v >= t.node_count())
    throw std::invalid_argument(std::string(what) + " node " + std::to_string(v) +
                                " is out of range");
}

void check_weights(const Topology& t, const EdgeWeights& w) {
  if (w.arc.size() != t.arc_count())
    throw std::invalid_argument("weights hold " + std::to_string(w.arc.size()) +
                                " arcs but the topology has " +
                                std::to_string(t.arc_count()));
  for (double x : w.arc)
    if (!(x > 0.0) || !std::isfinite(x))
      throw std::invalid_argument("arc weights must be positive and finite");
}

std::vector<double> dijkstra_impl(const Topology& t, const EdgeWeights& w, NodeId source,
                                  NodeId stop) {
  std::vector<double> dist(t.node_count(), std::numeric_limits<double>::infinity());
  std::vector<bool> done(t.node_count(), false);
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;

  dist[source] = 0.0;
  pq.emplace(0.0, source);
  while (!pq.empty()) {
    auto [du, u] = pq.top();
    pq.pop();
    if (done[u]) continue;
    done[u] = true;
    if (u == stop) break;

    auto adj = t.neighbors(u);
    std::size_t base = t.arc_offset(u);
    for (std::size_t i = 0; i < adj.size(); ++i) {
      NodeId v = adj[i];
      double nd = du + w.arc[base + i];
      if (nd < dist[v]) {
        dist[v] = nd;
        pq.emplace(nd, v);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<std::int64_t> bfs_distances(const Topology& t, NodeId source) {
  check_node(t, source, "source");
  std::vector<std::int64_t> dist(t.node_count(), -1);
  std::queue<NodeId> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    NodeId u = q.front();
    q.pop();
    for (NodeId v : t.neighbors(u)) {
      if (dist[v] >= 0) continue;
      dist[v] = dist[u] + 1;
      q.push(v);
    }
  }
  return dist;
}

std::optional<Route> bfs_path_from_distances(const Topology& t,
                                             const std::vector<std::int64_t>& dist,
                                             NodeId source, NodeId target) {
  check_node(t, source, "source");
  check_node(t, target, "target");
  if (dist[target] < 0) return std::nullopt;

  std::vector<NodeId> nodes{target};
  NodeId cur = target;
  while (cur != source) {
    NodeId next = cur;
    for (NodeId v : t.neighbors(cur)) {
      if (dist[v] == dist[cur] - 1) {
        next = v;
        break;
      }
    }
    if (next == cur) throw std::logic_error("hop-path reconstruction lost the source");
    nodes.push_back(next);
    cur = next;
  }
  std::reverse(nodes.begin(), nodes.end());
  return Route{source, target, std::move(nodes), RouteModel::trace};
}

std::optional<Route> bfs_path(const Topology& t, NodeId source, NodeId target) {
  return bfs_path_from_distances(t, bfs_distances(t, source), source, target);
}

std::vector<double> dijkstra_distances(const Topology& t, const EdgeWeights& w,
                                       NodeId source) {
  check_node(t, source, "source");
  check_weights(t, w);
  return dijkstra_impl(t, w, source, kNoStop);
}

std::optional<Route> dijkstra_path_from_distances(const Topology& t, const EdgeWeights& w,
                                                  const std::vector<double>& dist,
                                                  NodeId source, NodeId target) {
  check_node(t, source, "source");
  check_node(t, target, "target");
  if (!std::isfinite(dist[target])) return std::nullopt;

  std::vector<NodeId> nodes{target};
  NodeId cur = target;
  while (cur != source) {
    NodeId next = cur;
    for (NodeId v : t.neighbors(cur)) {
      // Arc weight v -> cur; the chosen predecessor reproduces dist[cur]
      // with the exact float sum Dijkstra used, so == is dependable here.
      double wt = w.arc[t.arc_index(v, cur)];
      if (dist[v] + wt == dist[cur]) {
        next = v;
        break;
      }
    }
    if (next == cur || nodes.size() >= t.node_count())
      throw std::logic_error("cost-path reconstruction lost the source");
    nodes.push_back(next);
    cur = next;
  }
  std::reverse(nodes.begin(), nodes.end());
  return Route{source, target, std::move(nodes), RouteModel::trace};
}

std::optional<Route> dijkstra_path(const Topology& t, const EdgeWeights& w, NodeId source,
                                   NodeId target) {
  check_node(t, source, "source");
  check_node(t, target, "target");
  check_weights(t, w);
  if (source == target)
    return Route{source, target, {source}, RouteModel::trace};
  auto dist = dijkstra_impl(t, w, source, target);
  return dijkstra_path_from_distances(t, w, dist, source, target);
}

}  // namespace routesim
