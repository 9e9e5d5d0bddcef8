#pragma once

#include <cstdint>

#include "routesim/topology.hpp"

namespace routesim {

enum class GraphModel { ba, er };

/// Preferential-attachment graph: a clique on attach + 1 seed nodes, then
/// each new node links to `attach` distinct existing nodes picked with
/// probability proportional to their current degree. Edge count is
/// attach * (2 * nodes - attach - 1) / 2. Requires nodes > attach >= 1.
Topology generate_ba(std::size_t nodes, std::size_t attach, std::uint64_t seed);

/// Erdos-Renyi G(n, p): every unordered pair becomes an edge independently
/// with probability p. Isolated nodes are kept, so node_count() == nodes.
/// Throws std::runtime_error when the draw produces no edge at all.
Topology generate_er(std::size_t nodes, double edge_prob, std::uint64_t seed);

struct GenSpec {
  GraphModel kind = GraphModel::ba;
  std::size_t nodes = 0;
  std::size_t attach = 3;
  double edge_prob = 0.0;
  std::uint64_t seed = 0;
};

Topology generate(const GenSpec& spec);

}  // namespace routesim
