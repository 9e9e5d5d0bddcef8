#include "routesim/topology.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace routesim {

bool Topology::has_edge(NodeId u, NodeId v) const {
  auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::size_t Topology::arc_index(NodeId u, NodeId v) const {
  auto adj = neighbors(u);
  auto it = std::lower_bound(adj.begin(), adj.end(), v);
  if (it == adj.end() || *it != v) return arc_count();
  return arc_offset(u) + static_cast<std::size_t>(it - adj.begin());
}

Topology build_topology(std::span<const Edge> edges, std::size_t node_count,
                        BuildReport* report) {
  BuildReport local;

  std::vector<Edge> canon;
  canon.reserve(edges.size());
  std::size_t max_id = 0;
  for (const auto& [a, b] : edges) {
    if (a == b) {
      ++local.self_loops_dropped;
      continue;
    }
    max_id = std::max<std::size_t>(max_id, std::max(a, b));
    canon.emplace_back(std::min(a, b), std::max(a, b));
  }
  if (canon.empty())
    throw std::runtime_error("graph build: edge list has no usable edge");

  if (node_count == 0) {
    node_count = max_id + 1;
  } else if (node_count <= max_id) {
    throw std::runtime_error("graph build: node count " + std::to_string(node_count) +
                             " does not cover node id " + std::to_string(max_id));
  }

  std::sort(canon.begin(), canon.end());
  auto last = std::unique(canon.begin(), canon.end());
  local.duplicate_edges_dropped = static_cast<std::size_t>(canon.end() - last);
  canon.erase(last, canon.end());

  Topology t;
  t.edge_count_ = canon.size();
  t.offsets_.assign(node_count + 1, 0);
  for (const auto& [a, b] : canon) {
    ++t.offsets_[a + 1];
    ++t.offsets_[b + 1];
  }
  for (std::size_t v = 0; v < node_count; ++v) t.offsets_[v + 1] += t.offsets_[v];

  t.neighbors_.resize(2 * canon.size());
  std::vector<std::size_t> cursor(t.offsets_.begin(), t.offsets_.end() - 1);
  for (const auto& [a, b] : canon) {
    t.neighbors_[cursor[a]++] = b;
    t.neighbors_[cursor[b]++] = a;
  }
  for (std::size_t v = 0; v < node_count; ++v) {
    auto begin = t.neighbors_.begin() + static_cast<std::ptrdiff_t>(t.offsets_[v]);
    auto end = t.neighbors_.begin() + static_cast<std::ptrdiff_t>(t.offsets_[v + 1]);
    std::sort(begin, end);
  }

  if (report) *report = local;
  return t;
}

Topology build_topology(std::span<const Edge> edges, BuildReport* report) {
  return build_topology(edges, 0, report);
}

}  // namespace routesim
