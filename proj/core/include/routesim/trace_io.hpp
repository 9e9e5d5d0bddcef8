#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "routesim/route.hpp"
#include "routesim/topology.hpp"

namespace routesim {

/// Bidirectional mapping between external node labels and dense ids, in
/// first-appearance order.
struct LabelMap {
  std::vector<std::string> id_to_label;
  std::unordered_map<std::string, NodeId> label_to_id;

  NodeId intern(std::string_view label);
  std::optional<NodeId> find(std::string_view label) const;
  const std::string& label(NodeId id) const { return id_to_label[id]; }
  std::size_t size() const { return id_to_label.size(); }
};

struct TraceParseStats {
  std::size_t routes_kept = 0;
  std::size_t unresolved_routes_dropped = 0;
  std::size_t short_routes_dropped = 0;
  std::size_t repeated_hops_collapsed = 0;
  BuildReport build;
};

/// Measured routes plus the topology their hops induce. Labels are interned
/// in order of first appearance across the kept routes.
struct TraceDataset {
  std::vector<Route> routes;
  Topology topology;
  LabelMap labels;
  std::set<NodeId> sources;
  std::set<NodeId> destinations;
  TraceParseStats stats;
};

/// Reads whitespace-separated node labels, one route per line. Lines that
/// are empty or start with '#' are skipped; a route containing '*' (an
/// unresolved hop) is dropped, as is any route shorter than two nodes once
/// consecutive repeats of the same label are collapsed. Throws
/// std::runtime_error when no route survives.
TraceDataset parse_traces(std::istream& in);

struct EdgeListData {
  Topology topology;
  LabelMap labels;
  BuildReport report;
};

/// Reads one "u v" pair of labels per line, same comment and blank-line
/// rules as parse_traces. A line with any other token count raises
/// std::runtime_error naming the line number.
EdgeListData parse_edge_list_labeled(std::istream& in);

/// Numeric variant: tokens must be nonnegative integers and are taken as
/// node ids verbatim, so ids written by write_edge_list read back unchanged.
Topology parse_edge_list(std::istream& in);

/// Keeps only routes toward destinations that every source of the dataset
/// reaches, the protocol used to compare route sets on equal pairs. Node
/// ids are re-densified; throws std::runtime_error when no destination is
/// common to all sources.
TraceDataset common_destination_filter(const TraceDataset& ds);

/// Writes "u v" per edge, each edge once with the smaller endpoint first.
/// Labels are used when given, dense ids otherwise.
void write_edge_list(const Topology& t, std::ostream& out, const LabelMap* labels = nullptr);

/// Writes one route per line as whitespace-separated labels (or dense ids).
void write_traces(std::span<const Route> routes, std::ostream& out,
                  const LabelMap* labels = nullptr);

}  // namespace routesim
