#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "routesim/route.hpp"
#include "routesim/topology.hpp"
#include "routesim/weights.hpp"

namespace routesim {

// Both path extractors rebuild the route backward from the target, at each
// step taking the smallest-id neighbor that sits on some optimal path. With
// sorted adjacency this selects one canonical route per (source, target)
// pair out of all tied optima, independent of traversal history.

/// Hop distances from source; -1 marks unreachable nodes.
std::vector<std::int64_t> bfs_distances(const Topology& t, NodeId source);

/// Canonical minimum-hop path, or absent when target is unreachable.
std::optional<Route> bfs_path(const Topology& t, NodeId source, NodeId target);

/// Same, reusing a distance array from bfs_distances(t, source).
std::optional<Route> bfs_path_from_distances(const Topology& t,
                                             const std::vector<std::int64_t>& dist,
                                             NodeId source, NodeId target);

/// Weighted distances from source; unreachable nodes get +infinity. Throws
/// std::invalid_argument on a non-positive or non-finite arc weight, or when
/// weights do not match the topology.
std::vector<double> dijkstra_distances(const Topology& t, const EdgeWeights& w,
                                       NodeId source);

/// Canonical minimum-cost path, or absent when target is unreachable.
std::optional<Route> dijkstra_path(const Topology& t, const EdgeWeights& w, NodeId source,
                                   NodeId target);

/// Same, reusing a distance array from dijkstra_distances(t, w, source).
std::optional<Route> dijkstra_path_from_distances(const Topology& t, const EdgeWeights& w,
                                                  const std::vector<double>& dist,
                                                  NodeId source, NodeId target);

}  // namespace routesim
