#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "routesim/route.hpp"
#include "routesim/topology.hpp"
#include "routesim/weights.hpp"

namespace routesim {

enum class ModelKind { uspm, ndm, lim, pfm };

std::string_view to_string(ModelKind kind);

/// Parses "uspm", "ndm", "lim" or "pfm"; throws std::invalid_argument.
ModelKind model_kind_from_string(std::string_view name);

inline constexpr double kLimAlphaMin = -5.0;
inline constexpr double kLimAlphaMax = 3.0;

/// A routing model plus its parameters. alpha drives lim and pfm; the
/// pareto_* bounds apply to pfm only, with pareto_max <= 0 standing for
/// "use the node count of the topology at hand".
struct ModelSpec {
  ModelKind kind = ModelKind::uspm;
  double alpha = 0.0;
  double pareto_min = 10.0;
  double pareto_max = 0.0;

  bool deterministic() const { return kind != ModelKind::pfm; }
  double resolved_pareto_max(std::size_t node_count) const;

  /// Validates parameters against a topology of node_count nodes; throws
  /// std::invalid_argument with a parameter-specific message.
  void validate(std::size_t node_count) const;
};

/// Minimum-hop route with deterministic tie-breaking; absent when
/// destination is unreachable.
std::optional<Route> route_uspm(const Topology& t, NodeId source, NodeId destination);

/// Minimum-cost route under the given arc weights with deterministic
/// tie-breaking; absent when destination is unreachable.
std::optional<Route> route_weighted(const Topology& t, const EdgeWeights& w, NodeId source,
                                    NodeId destination);

/// Degree-greedy route: both endpoints climb toward ever higher-degree
/// neighbors, then the two walks are joined, preferring a shared node and
/// falling back to a shortest hop connector between them. Absent only when
/// the walks live in different components.
std::optional<Route> route_ndm(const Topology& t, NodeId source, NodeId destination);

/// Arc weights for spec.kind on t (lim or pfm; the hop-based models take
/// none). For pfm the given seed selects the draw; lim ignores it.
EdgeWeights build_weights(const Topology& t, const ModelSpec& spec, std::uint64_t seed);

}  // namespace routesim
