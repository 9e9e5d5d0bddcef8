#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "routesim/topology.hpp"
#include "routesim/weights.hpp"

namespace testsupport {

using routesim::EdgeWeights;
using routesim::NodeId;
using routesim::Topology;

// Reversed-sequence lexicographic order, the documented tie-break between
// equal-cost paths.
inline bool reversed_less(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

// Minimum-cost simple path by full enumeration. Costs accumulate left to
// right exactly as the library's relaxations do, so == comparisons agree.
inline std::optional<std::vector<NodeId>> exhaustive_min_cost_path(const Topology& t,
                                                                   const EdgeWeights& w,
                                                                   NodeId s, NodeId d) {
  std::optional<std::vector<NodeId>> best;
  double best_cost = 0.0;
  std::vector<NodeId> path{s};
  std::vector<bool> visited(t.node_count(), false);
  visited[s] = true;

  auto consider = [&](double cost) {
    if (!best || cost < best_cost || (cost == best_cost && reversed_less(path, *best))) {
      best = path;
      best_cost = cost;
    }
  };

  std::function<void(NodeId, double)> dfs = [&](NodeId u, double cost) {
    if (u == d) {
      consider(cost);
      return;
    }
    auto adj = t.neighbors(u);
    std::size_t base = t.arc_offset(u);
    for (std::size_t i = 0; i < adj.size(); ++i) {
      NodeId v = adj[i];
      if (visited[v]) continue;
      visited[v] = true;
      path.push_back(v);
      dfs(v, cost + w.arc[base + i]);
      path.pop_back();
      visited[v] = false;
    }
  };
  dfs(s, 0.0);
  return best;
}

inline std::optional<std::vector<NodeId>> exhaustive_min_hop_path(const Topology& t,
                                                                  NodeId s, NodeId d) {
  EdgeWeights unit;
  unit.arc.assign(t.arc_count(), 1.0);
  return exhaustive_min_cost_path(t, unit, s, d);
}

// Straight-line rewrite of the degree-greedy two-sided procedure, kept
// intentionally naive: same tie-break rules, different mechanics.
inline std::optional<std::vector<NodeId>> ndm_reference(const Topology& t, NodeId s,
                                                        NodeId d) {
  if (s == d) return std::vector<NodeId>{s};

  auto top_neighbor = [&](NodeId x) -> NodeId {
    auto adj = t.neighbors(x);
    NodeId best = adj[0];
    std::size_t best_deg = t.degree(best);
    for (NodeId v : adj) {
      if (t.degree(v) > best_deg) {
        best = v;
        best_deg = t.degree(v);
      }
    }
    return best;
  };

  auto climb = [&](NodeId start) {
    std::vector<NodeId> p{start};
    if (t.degree(start) == 0) return p;
    for (;;) {
      NodeId x = p.back();
      NodeId y = top_neighbor(x);
      if (std::count(p.begin(), p.end(), y) > 0) break;
      p.push_back(y);
      if (top_neighbor(y) == x) break;
    }
    return p;
  };

  std::vector<NodeId> a = climb(s);
  std::vector<NodeId> b = climb(d);

  std::vector<NodeId> merged;
  bool have = false;
  for (std::size_t i = 0; i < a.size() && !have; ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (a[i] != b[j]) continue;
      merged.insert(merged.end(), a.begin(), a.begin() + i + 1);
      for (std::size_t k = j; k-- > 0;) merged.push_back(b[k]);
      have = true;
      break;
    }
  }

  if (!have) {
    std::vector<std::int64_t> dist(t.node_count(), -1);
    std::queue<NodeId> q;
    for (NodeId v : a)
      if (dist[v] < 0) {
        dist[v] = 0;
        q.push(v);
      }
    while (!q.empty()) {
      NodeId u = q.front();
      q.pop();
      for (NodeId v : t.neighbors(u))
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          q.push(v);
        }
    }

    NodeId tb = 0;
    std::int64_t bd = -1;
    for (NodeId v : b) {
      if (dist[v] < 0) continue;
      if (bd < 0 || dist[v] < bd || (dist[v] == bd && v < tb)) {
        bd = dist[v];
        tb = v;
      }
    }
    if (bd < 0) return std::nullopt;

    std::vector<NodeId> conn{tb};
    while (dist[conn.back()] > 0) {
      NodeId cur = conn.back();
      NodeId pick = cur;
      for (NodeId v : t.neighbors(cur))
        if (dist[v] == dist[cur] - 1 && (pick == cur || v < pick)) pick = v;
      conn.push_back(pick);
    }
    std::reverse(conn.begin(), conn.end());

    std::size_t ia = std::find(a.begin(), a.end(), conn.front()) - a.begin();
    std::size_t jb = std::find(b.begin(), b.end(), conn.back()) - b.begin();
    merged.insert(merged.end(), a.begin(), a.begin() + ia + 1);
    merged.insert(merged.end(), conn.begin() + 1, conn.end());
    for (std::size_t k = jb; k-- > 0;) merged.push_back(b[k]);
  }

  // first-visit loop removal
  std::vector<NodeId> simple;
  for (NodeId x : merged) {
    auto it = std::find(simple.begin(), simple.end(), x);
    if (it == simple.end()) {
      simple.push_back(x);
    } else {
      simple.erase(it + 1, simple.end());
    }
  }
  return simple;
}

inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  auto ranks = [](const std::vector<double>& v) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return v[a] < v[b]; });
    std::vector<double> r(v.size());
    std::size_t i = 0;
    while (i < idx.size()) {
      std::size_t j = i;
      while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
      double avg = (static_cast<double>(i + j)) / 2.0 + 1.0;
      for (std::size_t k = i; k <= j; ++k) r[idx[k]] = avg;
      i = j + 1;
    }
    return r;
  };
  auto rx = ranks(x), ry = ranks(y);
  double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / rx.size();
  double my = std::accumulate(ry.begin(), ry.end(), 0.0) / ry.size();
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

// O(n^3) triangle and triple counting for small graphs.
inline std::pair<std::uint64_t, std::uint64_t> brute_triangle_triples(const Topology& t) {
  std::uint64_t triangles = 0, triples = 0;
  std::size_t n = t.node_count();
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      for (NodeId w = v + 1; w < n; ++w) {
        int e = t.has_edge(u, v) + t.has_edge(u, w) + t.has_edge(v, w);
        if (e == 3) {
          ++triangles;
          triples += 3;
        } else if (e == 2) {
          ++triples;
        }
      }
  return {triangles, triples};
}

}  // namespace testsupport
