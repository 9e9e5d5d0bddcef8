#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "routesim/histogram.hpp"
#include "routesim/metrics.hpp"
#include "routesim/models.hpp"
#include "routesim/route.hpp"
#include "routesim/topology.hpp"

namespace routesim {

/// A batch of routed (source, destination) pairs: the cartesian product of
/// sources x destinations minus the diagonal. repetitions == 0 picks the
/// model default, 1 for the deterministic models and 100 for pfm; the
/// deterministic models always run one repetition. Repetition r of pfm
/// draws its weights from base_seed + r.
struct ExperimentConfig {
  ModelSpec model;
  std::vector<NodeId> sources;
  std::vector<NodeId> destinations;
  std::size_t repetitions = 0;
  std::uint64_t base_seed = 0;

  std::size_t resolved_repetitions() const {
    if (model.deterministic()) return 1;
    return repetitions == 0 ? 100 : repetitions;
  }
};

/// Degree distribution of the node visited at each hop position (0 is the
/// source), plus its entropy in nats. Routes shorter than a position do not
/// contribute to it.
struct HopDegreeProfile {
  std::vector<Histogram> per_hop;
  std::vector<double> entropy;
};

struct ExperimentResult {
  std::vector<Route> routes;
  TopologyMetrics sampled_metrics;
  Histogram length_distribution;
  double mean_route_length = 0.0;
  std::size_t unreachable_pairs = 0;
  HopDegreeProfile profile;
  std::size_t pair_count = 0;
  std::size_t repetitions_run = 0;
};

/// Union of the nodes and edges touched by the given routes, with node ids
/// re-densified in first-appearance order. Throws when no route carries an
/// edge.
Topology merge_routes(std::span<const Route> routes);

/// Distribution of hop counts across routes.
Histogram length_distribution(std::span<const Route> routes);

/// Kullback-Leibler divergence D(p || q) in nats over the union of both
/// supports. Bins missing on either side enter as 1e-10 before both sides
/// are renormalized, so the value is always finite; it is 0 exactly when
/// p == q bin by bin.
double distribution_distance(const Histogram& p, const Histogram& q);

/// Degrees are read from t, which must cover every node the routes visit.
HopDegreeProfile hop_degree_profile(std::span<const Route> routes, const Topology& t);

/// Routes every pair under cfg.model. The length distribution is averaged
/// over repetitions (each repetition normalized first); pairs whose
/// destination is unreachable are counted once, not per repetition. threads
/// only splits the work; results are identical for any thread count.
ExperimentResult run_experiment(const Topology& t, const ExperimentConfig& cfg,
                                unsigned threads = 1);

struct SweepRow {
  double alpha = 0.0;
  double mean_route_length = 0.0;
  double distance = 0.0;
  TopologyMetrics sampled_metrics;
  std::size_t unreachable_pairs = 0;
};

struct SweepTable {
  std::vector<SweepRow> rows;
  std::size_t best_index = 0;
};

/// Index of the row with the smallest distance, smallest alpha on ties.
std::size_t best_sweep_row(std::span<const SweepRow> rows);

/// Runs one experiment per alpha (cfg.model.alpha is overridden) and scores
/// each length distribution against `reference`.
SweepTable alpha_sweep(const Topology& t, const ExperimentConfig& cfg,
                       std::span<const double> alphas, const Histogram& reference,
                       unsigned threads = 1);

}  // namespace routesim
