#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "routesim/topology.hpp"

namespace routesim {

/// Empirical degree distribution: (degree, probability) pairs sorted by
/// degree, probabilities summing to 1 over all nodes.
struct DegreeDistribution {
  std::vector<std::pair<std::size_t, double>> points;
};

struct TopologyMetrics {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  double avg_degree = 0.0;
  double heterogeneity = 0.0;
  double clustering = 0.0;
  /// Set when clustering is reported as 0 because the graph has no connected
  /// triple at all.
  bool no_triples = false;
  /// Absent when the degree distribution has fewer than two distinct positive
  /// degrees, which leaves the log-log fit undefined.
  std::optional<double> gamma;
};

double average_degree(const Topology& t);

/// <k^2> / <k>^2. Equals 1 exactly iff all degrees are equal.
double heterogeneity(const Topology& t);

/// (number of triangles, number of connected triples N_vee). Each triangle is
/// counted once; N_vee sums deg*(deg-1)/2 over nodes.
std::pair<std::uint64_t, std::uint64_t> triangle_triple_counts(const Topology& t);

/// Global transitivity 3 * N_triangle / N_vee. When N_vee == 0 returns 0 and
/// sets *no_triples if given.
double clustering_coefficient(const Topology& t, bool* no_triples = nullptr);

DegreeDistribution degree_distribution(const Topology& t);

/// Power-law exponent gamma from an unweighted least-squares line through
/// (ln k, ln p(k)) over all degrees k >= 1 present in the distribution; the
/// returned value is the negated slope. Throws std::invalid_argument when the
/// support has fewer than two such degrees.
double powerlaw_exponent(const DegreeDistribution& dist);

TopologyMetrics compute_metrics(const Topology& t);

}  // namespace routesim
