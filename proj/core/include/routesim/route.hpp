#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "routesim/topology.hpp"

namespace routesim {

enum class RouteModel { trace, uspm, ndm, lim, pfm };

std::string_view to_string(RouteModel m);

/// A simple path through a topology. nodes.front() == source and
/// nodes.back() == destination; hop count is nodes.size() - 1.
struct Route {
  NodeId source = 0;
  NodeId destination = 0;
  std::vector<NodeId> nodes;
  RouteModel model = RouteModel::trace;

  std::size_t hops() const { return nodes.empty() ? 0 : nodes.size() - 1; }
};

}  // namespace routesim
