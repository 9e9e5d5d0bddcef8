#include "routesim/synth.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "routesim/rng.hpp"

namespace routesim {

Topology generate_ba(std::size_t nodes, std::size_t attach, std::uint64_t seed) {
  if (attach < 1 || nodes <= attach)
    throw std::invalid_argument("ba generator: need nodes > attach >= 1");

  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(attach * (2 * nodes - attach - 1) / 2);

  // One pool entry per unit of degree makes pool draws degree-proportional.
  std::vector<NodeId> pool;
  for (NodeId u = 0; u <= attach; ++u)
    for (NodeId v = u + 1; v <= attach; ++v) {
      edges.emplace_back(u, v);
      pool.push_back(u);
      pool.push_back(v);
    }

  std::vector<NodeId> picked;
  for (NodeId w = static_cast<NodeId>(attach) + 1; w < nodes; ++w) {
    picked.clear();
    while (picked.size() < attach) {
      NodeId v = pool[uniform_below(rng, pool.size())];
      if (std::find(picked.begin(), picked.end(), v) == picked.end()) picked.push_back(v);
    }
    for (NodeId v : picked) {
      edges.emplace_back(v, w);
      pool.push_back(v);
      pool.push_back(w);
    }
  }
  return build_topology(edges, nodes, nullptr);
}

Topology generate_er(std::size_t nodes, double edge_prob, std::uint64_t seed) {
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
    throw std::invalid_argument("er generator: edge probability must lie in [0, 1]");

  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < nodes; ++u)
    for (NodeId v = u + 1; v < nodes; ++v)
      if (uniform_unit(rng) < edge_prob) edges.emplace_back(u, v);

  if (edges.empty())
    throw std::runtime_error("er generator: the draw produced an empty graph");
  return build_topology(edges, nodes, nullptr);
}

Topology generate(const GenSpec& spec) {
  switch (spec.kind) {
    case GraphModel::ba:
      return generate_ba(spec.nodes, spec.attach, spec.seed);
    case GraphModel::er:
      return generate_er(spec.nodes, spec.edge_prob, spec.seed);
  }
  throw std::invalid_argument("unknown graph model");
}

}  // namespace routesim
