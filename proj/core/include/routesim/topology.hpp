#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace routesim {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Counts of input edges discarded while building a Topology.
struct BuildReport {
  std::size_t self_loops_dropped = 0;
  std::size_t duplicate_edges_dropped = 0;
};

/// Immutable undirected simple graph over dense node ids 0..node_count-1.
/// Adjacency is CSR with every neighbor list sorted ascending; that order
/// fixes the tie-breaking used by all deterministic path routines.
class Topology {
 public:
  /// Default state is the empty graph; build_topology never returns it.
  Topology() = default;

  std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return edge_count_; }

  /// Number of directed arcs, 2 * edge_count. Arc (v, i-th neighbor of v)
  /// has canonical index arc_offset(v) + i; weights are stored in that order.
  std::size_t arc_count() const { return neighbors_.size(); }
  std::size_t arc_offset(NodeId v) const { return offsets_[v]; }

  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }

  bool has_edge(NodeId u, NodeId v) const;

  /// Canonical arc index of u->v, or arc_count() when u and v are not adjacent.
  std::size_t arc_index(NodeId u, NodeId v) const;

  bool operator==(const Topology&) const = default;

 private:
  friend Topology build_topology(std::span<const Edge> edges, std::size_t node_count,
                                 BuildReport* report);

  std::vector<std::size_t> offsets_;
  std::vector<NodeId> neighbors_;
  std::size_t edge_count_ = 0;
};

/// Builds a simple undirected graph from an unordered edge list. Self-loops
/// and duplicate edges are dropped (counted in report when given). Throws
/// std::runtime_error when no edge survives.
Topology build_topology(std::span<const Edge> edges, BuildReport* report = nullptr);

/// Same, with an explicit node count >= max referenced id + 1 so that
/// isolated trailing nodes are representable.
Topology build_topology(std::span<const Edge> edges, std::size_t node_count,
                        BuildReport* report = nullptr);

}  // namespace routesim
