#include "routesim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace routesim {

double average_degree(const Topology& t) {
  return 2.0 * static_cast<double>(t.edge_count()) / static_cast<double>(t.node_count());
}

double heterogeneity(const Topology& t) {
  std::uint64_t sum_k = 0;
  std::uint64_t sum_k2 = 0;
  for (NodeId v = 0; v < t.node_count(); ++v) {
    std::uint64_t k = t.degree(v);
    sum_k += k;
    sum_k2 += k * k;
  }
  if (sum_k == 0) throw std::invalid_argument("heterogeneity: graph has no edges");
  return static_cast<double>(sum_k2) * static_cast<double>(t.node_count()) /
         (static_cast<double>(sum_k) * static_cast<double>(sum_k));
}

std::pair<std::uint64_t, std::uint64_t> triangle_triple_counts(const Topology& t) {
  std::uint64_t triangles = 0;
  std::uint64_t triples = 0;
  for (NodeId u = 0; u < t.node_count(); ++u) {
    std::uint64_t k = t.degree(u);
    triples += k * (k - 1) / 2;
    auto adj_u = t.neighbors(u);
    for (NodeId v : adj_u) {
      if (v <= u) continue;
      // Count w > v adjacent to both u and v; each triangle u < v < w is
      // found exactly once.
      auto adj_v = t.neighbors(v);
      auto iu = std::upper_bound(adj_u.begin(), adj_u.end(), v);
      auto iv = std::upper_bound(adj_v.begin(), adj_v.end(), v);
      while (iu != adj_u.end() && iv != adj_v.end()) {
        if (*iu < *iv) {
          ++iu;
        } else if (*iv < *iu) {
          ++iv;
        } else {
          ++triangles;
          ++iu;
          ++iv;
        }
      }
    }
  }
  return {triangles, triples};
}

double clustering_coefficient(const Topology& t, bool* no_triples) {
  auto [triangles, triples] = triangle_triple_counts(t);
  if (no_triples) *no_triples = (triples == 0);
  if (triples == 0) return 0.0;
  return 3.0 * static_cast<double>(triangles) / static_cast<double>(triples);
}

DegreeDistribution degree_distribution(const Topology& t) {
  std::map<std::size_t, std::size_t> counts;
  for (NodeId v = 0; v < t.node_count(); ++v) ++counts[t.degree(v)];

  DegreeDistribution dist;
  dist.points.reserve(counts.size());
  double n = static_cast<double>(t.node_count());
  for (const auto& [k, c] : counts) dist.points.emplace_back(k, static_cast<double>(c) / n);
  return dist;
}

double powerlaw_exponent(const DegreeDistribution& dist) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& [k, p] : dist.points) {
    if (k < 1 || p <= 0.0) continue;
    pts.emplace_back(std::log(static_cast<double>(k)), std::log(p));
  }
  if (pts.size() < 2)
    throw std::invalid_argument("power-law fit: need at least two positive degrees");

  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());

  double sxy = 0.0, sxx = 0.0;
  for (const auto& [x, y] : pts) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
  }
  return -sxy / sxx;
}

TopologyMetrics compute_metrics(const Topology& t) {
  TopologyMetrics m;
  m.node_count = t.node_count();
  m.edge_count = t.edge_count();
  m.avg_degree = average_degree(t);
  m.heterogeneity = heterogeneity(t);
  m.clustering = clustering_coefficient(t, &m.no_triples);
  auto dist = degree_distribution(t);
  try {
    m.gamma = powerlaw_exponent(dist);
  } catch (const std::invalid_argument&) {
    m.gamma = std::nullopt;
  }
  return m;
}

}  // namespace routesim
