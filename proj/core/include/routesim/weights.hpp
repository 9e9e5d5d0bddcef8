#pragma once

#include <cstdint>
#include <vector>

#include "routesim/topology.hpp"

namespace routesim {

/// Directed per-arc weights over a fixed Topology, stored in canonical arc
/// order: the weight of arc v -> (i-th sorted neighbor of v) lives at
/// arc[t.arc_offset(v) + i].
struct EdgeWeights {
  std::vector<double> arc;

  /// Weight of the arc from -> to; throws std::invalid_argument when the
  /// nodes are not adjacent.
  double between(const Topology& t, NodeId from, NodeId to) const;
};

/// Every arc gets the same weight w > 0.
EdgeWeights uniform_weights(const Topology& t, double w = 1.0);

/// Degree-biased weights: w(s -> i) = k_i^alpha / sum over neighbors j of s
/// of k_j^alpha. Outgoing weights of every non-isolated node sum to 1.
/// Computed per node with log-sum-exp so extreme alpha stays finite; throws
/// std::invalid_argument if a weight still underflows to 0 (keep alpha within
/// about [-5, 3] for Internet-like degree ranges).
EdgeWeights lim_weights(const Topology& t, double alpha);

/// Inverse-CDF draw from the Pareto density truncated to [lower, upper),
/// p(x) proportional to x^(-alpha-1); u must lie in [0, 1). u == 0 maps to
/// lower and u -> 1 approaches upper.
double sample_bounded_pareto(double alpha, double lower, double upper, double u);

/// Independent bounded-Pareto weight per directed arc, in canonical arc
/// order; the two directions of an edge are sampled independently. A given
/// (topology, alpha, lower, upper, seed) always yields the same weights.
EdgeWeights pfm_weights(const Topology& t, double alpha, double lower, double upper,
                        std::uint64_t seed);

}  // namespace routesim
