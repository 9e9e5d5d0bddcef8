#include "routesim/histogram.hpp"

#include <cmath>
#include <stdexcept>

namespace routesim {

double Histogram::mean() const {
  double m = 0.0;
  for (const auto& [value, p] : bins) m += static_cast<double>(value) * p;
  return m;
}

Histogram histogram_from_counts(const std::map<std::size_t, std::size_t>& counts) {
  std::size_t total = 0;
  for (const auto& [value, c] : counts) total += c;
  if (total == 0) throw std::invalid_argument("histogram: no observations");

  Histogram h;
  h.total_count = total;
  for (const auto& [value, c] : counts) {
    if (c == 0) continue;
    h.bins[value] = static_cast<double>(c) / static_cast<double>(total);
  }
  return h;
}

double entropy(const Histogram& h, bool log2_units) {
  double s = 0.0;
  for (const auto& [value, p] : h.bins) {
    if (p <= 0.0) continue;
    s -= p * std::log(p);
  }
  return log2_units ? s / std::log(2.0) : s;
}

}  // namespace routesim
