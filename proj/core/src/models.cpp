#include "routesim/models.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "routesim/shortest_path.hpp"

namespace routesim {

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::uspm: return "uspm";
    case ModelKind::ndm: return "ndm";
    case ModelKind::lim: return "lim";
    case ModelKind::pfm: return "pfm";
  }
  return "?";
}

std::string_view to_string(RouteModel m) {
  switch (m) {
    case RouteModel::trace: return "trace";
    case RouteModel::uspm: return "uspm";
    case RouteModel::ndm: return "ndm";
    case RouteModel::lim: return "lim";
    case RouteModel::pfm: return "pfm";
  }
  return "?";
}

ModelKind model_kind_from_string(std::string_view name) {
  if (name == "uspm") return ModelKind::uspm;
  if (name == "ndm") return ModelKind::ndm;
  if (name == "lim") return ModelKind::lim;
  if (name == "pfm") return ModelKind::pfm;
  throw std::invalid_argument("unknown model '" + std::string(name) +
                              "'; expected uspm, ndm, lim or pfm");
}

double ModelSpec::resolved_pareto_max(std::size_t node_count) const {
  return pareto_max > 0.0 ? pareto_max : static_cast<double>(node_count);
}

void ModelSpec::validate(std::size_t node_count) const {
  if (!std::isfinite(alpha)) throw std::invalid_argument("alpha must be finite");
  switch (kind) {
    case ModelKind::uspm:
    case ModelKind::ndm:
      return;
    case ModelKind::lim:
      if (alpha < kLimAlphaMin || alpha > kLimAlphaMax)
        throw std::invalid_argument("lim alpha " + std::to_string(alpha) +
                                    " outside the supported range [-5, 3]");
      return;
    case ModelKind::pfm: {
      if (!(alpha > 0.0))
        throw std::invalid_argument("pfm alpha must be positive");
      double hi = resolved_pareto_max(node_count);
      if (!(pareto_min > 0.0) || !(pareto_min < hi))
        throw std::invalid_argument("pfm bounds need 0 < pareto-min < pareto-max (got " +
                                    std::to_string(pareto_min) + " and " +
                                    std::to_string(hi) + ")");
      return;
    }
  }
}

std::optional<Route> route_uspm(const Topology& t, NodeId source, NodeId destination) {
  auto r = bfs_path(t, source, destination);
  if (r) r->model = RouteModel::uspm;
  return r;
}

std::optional<Route> route_weighted(const Topology& t, const EdgeWeights& w, NodeId source,
                                    NodeId destination) {
  return dijkstra_path(t, w, source, destination);
}

EdgeWeights build_weights(const Topology& t, const ModelSpec& spec, std::uint64_t seed) {
  switch (spec.kind) {
    case ModelKind::lim:
      return lim_weights(t, spec.alpha);
    case ModelKind::pfm:
      return pfm_weights(t, spec.alpha, spec.pareto_min,
                         spec.resolved_pareto_max(t.node_count()), seed);
    default:
      throw std::invalid_argument("model " + std::string(to_string(spec.kind)) +
                                  " does not use arc weights");
  }
}

namespace {

// Neighbor of x with the highest degree, smallest id on ties. x must have
// at least one neighbor.
NodeId highest_degree_neighbor(const Topology& t, NodeId x) {
  auto adj = t.neighbors(x);
  NodeId best = adj[0];
  for (NodeId v : adj)
    if (t.degree(v) > t.degree(best)) best = v;
  return best;
}

// Greedy climb from start: keep stepping to the highest-degree neighbor
// until the walk would revisit a node or the last two nodes are each
// other's highest-degree neighbor.
std::vector<NodeId> ndm_walk(const Topology& t, NodeId start) {
  std::vector<NodeId> walk{start};
  std::unordered_set<NodeId> seen{start};
  NodeId x = start;
  while (t.degree(x) > 0) {
    NodeId y = highest_degree_neighbor(t, x);
    if (seen.count(y)) break;
    walk.push_back(y);
    seen.insert(y);
    if (highest_degree_neighbor(t, y) == x) break;
    x = y;
  }
  return walk;
}

// Shortest hop connector from any node of `from` to the nearest node listed
// in `to` (ties: fewer hops first, then smaller node id). Returned path
// starts inside `from` and ends at the chosen target; empty when no target
// is reachable.
std::vector<NodeId> bridge_walks(const Topology& t, const std::vector<NodeId>& from,
                                 const std::vector<NodeId>& to) {
  constexpr std::int64_t kUnseen = -1;
  std::vector<std::int64_t> dist(t.node_count(), kUnseen);
  std::queue<NodeId> q;
  for (NodeId v : from) {
    if (dist[v] != kUnseen) continue;
    dist[v] = 0;
    q.push(v);
  }
  while (!q.empty()) {
    NodeId u = q.front();
    q.pop();
    for (NodeId v : t.neighbors(u)) {
      if (dist[v] != kUnseen) continue;
      dist[v] = dist[u] + 1;
      q.push(v);
    }
  }

  NodeId target = 0;
  std::int64_t best = kUnseen;
  for (NodeId v : to) {
    if (dist[v] == kUnseen) continue;
    if (best == kUnseen || dist[v] < best || (dist[v] == best && v < target)) {
      best = dist[v];
      target = v;
    }
  }
  if (best == kUnseen) return {};

  std::vector<NodeId> hop(1, target);
  NodeId cur = target;
  while (dist[cur] != 0) {
    NodeId next = cur;
    for (NodeId v : t.neighbors(cur)) {
      if (dist[v] == dist[cur] - 1) {
        next = v;
        break;
      }
    }
    if (next == cur) throw std::logic_error("walk bridging lost its origin");
    hop.push_back(next);
    cur = next;
  }
  std::reverse(hop.begin(), hop.end());
  return hop;
}

// Drop loops by keeping only the first visit of each node; whenever a node
// reappears, everything after its first visit is discarded.
std::vector<NodeId> keep_first_visits(std::vector<NodeId> nodes) {
  std::vector<NodeId> out;
  std::unordered_map<NodeId, std::size_t> at;
  for (NodeId x : nodes) {
    auto it = at.find(x);
    if (it == at.end()) {
      at.emplace(x, out.size());
      out.push_back(x);
      continue;
    }
    std::size_t keep = it->second + 1;
    while (out.size() > keep) {
      at.erase(out.back());
      out.pop_back();
    }
  }
  return out;
}

}  // namespace

std::optional<Route> route_ndm(const Topology& t, NodeId source, NodeId destination) {
  if (source >= t.node_count() || destination >= t.node_count())
    throw std::invalid_argument("route endpoints out of range");
  if (source == destination)
    return Route{source, destination, {source}, RouteModel::ndm};

  std::vector<NodeId> a = ndm_walk(t, source);
  std::vector<NodeId> b = ndm_walk(t, destination);

  std::unordered_map<NodeId, std::size_t> b_index;
  for (std::size_t j = 0; j < b.size(); ++j) b_index.emplace(b[j], j);

  std::vector<NodeId> nodes;
  bool joined = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto it = b_index.find(a[i]);
    if (it == b_index.end()) continue;
    nodes.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i + 1));
    for (std::size_t j = it->second; j-- > 0;) nodes.push_back(b[j]);
    joined = true;
    break;
  }

  if (!joined) {
    std::vector<NodeId> hop = bridge_walks(t, a, b);
    if (hop.empty()) return std::nullopt;
    std::size_t ia = 0;
    while (a[ia] != hop.front()) ++ia;
    std::size_t jb = b_index.at(hop.back());
    nodes.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(ia + 1));
    nodes.insert(nodes.end(), hop.begin() + 1, hop.end());
    for (std::size_t j = jb; j-- > 0;) nodes.push_back(b[j]);
  }

  nodes = keep_first_visits(std::move(nodes));
  return Route{source, destination, std::move(nodes), RouteModel::ndm};
}

}  // namespace routesim
