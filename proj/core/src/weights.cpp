#include "routesim/weights.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "routesim/rng.hpp"

namespace routesim {

double EdgeWeights::between(const Topology& t, NodeId from, NodeId to) const {
  std::size_t idx = t.arc_index(from, to);
  if (idx == t.arc_count())
    throw std::invalid_argument("edge weights: nodes " + std::to_string(from) + " and " +
                                std::to_string(to) + " are not adjacent");
  return arc[idx];
}

EdgeWeights uniform_weights(const Topology& t, double w) {
  if (!(w > 0.0) || !std::isfinite(w))
    throw std::invalid_argument("uniform weights: weight must be positive and finite");
  EdgeWeights ew;
  ew.arc.assign(t.arc_count(), w);
  return ew;
}

EdgeWeights lim_weights(const Topology& t, double alpha) {
  if (!std::isfinite(alpha))
    throw std::invalid_argument("degree-biased weights: alpha must be finite");

  EdgeWeights ew;
  ew.arc.resize(t.arc_count());

  std::vector<double> log_deg(t.node_count());
  for (NodeId v = 0; v < t.node_count(); ++v)
    log_deg[v] = std::log(static_cast<double>(t.degree(v)));

  for (NodeId s = 0; s < t.node_count(); ++s) {
    auto adj = t.neighbors(s);
    if (adj.empty()) continue;

    double hi = -HUGE_VAL;
    for (NodeId j : adj) hi = std::max(hi, alpha * log_deg[j]);

    double denom = 0.0;
    std::size_t base = t.arc_offset(s);
    for (std::size_t i = 0; i < adj.size(); ++i) {
      double e = std::exp(alpha * log_deg[adj[i]] - hi);
      ew.arc[base + i] = e;
      denom += e;
    }
    for (std::size_t i = 0; i < adj.size(); ++i) {
      double w = ew.arc[base + i] / denom;
      if (!(w > 0.0) || !std::isfinite(w))
        throw std::invalid_argument(
            "degree-biased weights: weight underflow at node " + std::to_string(s) +
            " for alpha " + std::to_string(alpha) + "; usable range is roughly [-5, 3]");
      ew.arc[base + i] = w;
    }
  }
  return ew;
}

double sample_bounded_pareto(double alpha, double lower, double upper, double u) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::invalid_argument("bounded Pareto: alpha must be positive and finite");
  if (!(0.0 < lower && lower < upper) || !std::isfinite(upper))
    throw std::invalid_argument("bounded Pareto: need 0 < lower < upper < inf");
  if (!(0.0 <= u && u < 1.0))
    throw std::invalid_argument("bounded Pareto: u must lie in [0, 1)");

  double ratio = std::pow(lower / upper, alpha);
  double x = lower * std::pow(1.0 - u * (1.0 - ratio), -1.0 / alpha);
  if (x >= upper) x = std::nextafter(upper, lower);
  return x;
}

EdgeWeights pfm_weights(const Topology& t, double alpha, double lower, double upper,
                        std::uint64_t seed) {
  EdgeWeights ew;
  ew.arc.resize(t.arc_count());
  std::mt19937_64 rng(seed);
  for (std::size_t a = 0; a < t.arc_count(); ++a)
    ew.arc[a] = sample_bounded_pareto(alpha, lower, upper, uniform_unit(rng));
  return ew;
}

}  // namespace routesim
