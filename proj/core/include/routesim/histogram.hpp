#pragma once

#include <cstddef>
#include <map>

namespace routesim {

/// Normalized distribution over integer bins. Bins carry probabilities that
/// sum to 1; total_count remembers how many observations backed them.
struct Histogram {
  std::map<std::size_t, double> bins;
  std::size_t total_count = 0;

  double mean() const;
};

/// Normalizes raw counts into a Histogram. Throws std::invalid_argument when
/// every count is zero.
Histogram histogram_from_counts(const std::map<std::size_t, std::size_t>& counts);

/// Shannon entropy in nats; empty bins contribute nothing. Pass log2_units
/// to report bits instead.
double entropy(const Histogram& h, bool log2_units = false);

}  // namespace routesim
