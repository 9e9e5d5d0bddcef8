#include "routesim/trace_io.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace routesim {

NodeId LabelMap::intern(std::string_view label) {
  auto it = label_to_id.find(std::string(label));
  if (it != label_to_id.end()) return it->second;
  NodeId id = static_cast<NodeId>(id_to_label.size());
  id_to_label.emplace_back(label);
  label_to_id.emplace(id_to_label.back(), id);
  return id;
}

std::optional<NodeId> LabelMap::find(std::string_view label) const {
  auto it = label_to_id.find(std::string(label));
  if (it == label_to_id.end()) return std::nullopt;
  return it->second;
}

namespace {

bool skippable(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r\n");
  return pos == std::string::npos || line[pos] == '#';
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) toks.push_back(std::move(tok));
  return toks;
}

}  // namespace

TraceDataset parse_traces(std::istream& in) {
  TraceDataset ds;
  std::vector<std::vector<std::string>> kept;

  std::string line;
  while (std::getline(in, line)) {
    if (skippable(line)) continue;
    auto toks = tokens_of(line);

    if (std::find(toks.begin(), toks.end(), "*") != toks.end()) {
      ++ds.stats.unresolved_routes_dropped;
      continue;
    }
    std::size_t before = toks.size();
    auto last = std::unique(toks.begin(), toks.end());
    toks.erase(last, toks.end());
    ds.stats.repeated_hops_collapsed += before - toks.size();

    if (toks.size() < 2) {
      ++ds.stats.short_routes_dropped;
      continue;
    }
    kept.push_back(std::move(toks));
  }
  if (kept.empty()) throw std::runtime_error("trace input holds no usable route");

  std::vector<Edge> edges;
  for (const auto& toks : kept) {
    Route r;
    r.model = RouteModel::trace;
    r.nodes.reserve(toks.size());
    for (const auto& tok : toks) r.nodes.push_back(ds.labels.intern(tok));
    r.source = r.nodes.front();
    r.destination = r.nodes.back();
    for (std::size_t i = 0; i + 1 < r.nodes.size(); ++i)
      edges.emplace_back(r.nodes[i], r.nodes[i + 1]);
    ds.sources.insert(r.source);
    ds.destinations.insert(r.destination);
    ds.routes.push_back(std::move(r));
  }
  ds.stats.routes_kept = ds.routes.size();
  ds.topology = build_topology(edges, ds.labels.size(), &ds.stats.build);
  return ds;
}

EdgeListData parse_edge_list_labeled(std::istream& in) {
  EdgeListData data;
  std::vector<Edge> edges;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    auto toks = tokens_of(line);
    if (toks.size() != 2)
      throw std::runtime_error("edge list line " + std::to_string(line_no) +
                               ": expected two labels, got " + std::to_string(toks.size()));
    // interned one after the other; as emplace arguments the evaluation
    // order, and with it the id assignment, would be up to the compiler
    NodeId u = data.labels.intern(toks[0]);
    NodeId v = data.labels.intern(toks[1]);
    edges.emplace_back(u, v);
  }
  if (edges.empty()) throw std::runtime_error("edge list input holds no edge");
  data.topology = build_topology(edges, data.labels.size(), &data.report);
  return data;
}

Topology parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    auto toks = tokens_of(line);
    if (toks.size() != 2)
      throw std::runtime_error("edge list line " + std::to_string(line_no) +
                               ": expected two node ids, got " + std::to_string(toks.size()));
    NodeId pair[2];
    for (int i = 0; i < 2; ++i) {
      bool digits = !toks[i].empty() &&
                    std::all_of(toks[i].begin(), toks[i].end(),
                                [](unsigned char c) { return std::isdigit(c); });
      unsigned long long id = 0;
      if (digits) {
        try {
          id = std::stoull(toks[i]);
        } catch (const std::out_of_range&) {
          digits = false;
        }
      }
      if (!digits || id > std::numeric_limits<NodeId>::max())
        throw std::runtime_error("edge list line " + std::to_string(line_no) + ": '" +
                                 toks[i] + "' is not a node id");
      pair[i] = static_cast<NodeId>(id);
    }
    edges.emplace_back(pair[0], pair[1]);
  }
  if (edges.empty()) throw std::runtime_error("edge list input holds no edge");
  return build_topology(edges);
}

TraceDataset common_destination_filter(const TraceDataset& ds) {
  std::unordered_map<NodeId, std::set<NodeId>> reached;
  for (const auto& r : ds.routes) reached[r.source].insert(r.destination);

  std::set<NodeId> common = ds.destinations;
  for (const auto& [src, dests] : reached) {
    std::set<NodeId> next;
    std::set_intersection(common.begin(), common.end(), dests.begin(), dests.end(),
                          std::inserter(next, next.begin()));
    common.swap(next);
  }
  if (common.empty())
    throw std::runtime_error("no destination is reached from every source");

  TraceDataset out;
  out.stats = ds.stats;
  std::vector<Edge> edges;
  for (const auto& r : ds.routes) {
    if (!common.count(r.destination)) continue;
    Route nr;
    nr.model = r.model;
    nr.nodes.reserve(r.nodes.size());
    for (NodeId v : r.nodes) nr.nodes.push_back(out.labels.intern(ds.labels.label(v)));
    nr.source = nr.nodes.front();
    nr.destination = nr.nodes.back();
    for (std::size_t i = 0; i + 1 < nr.nodes.size(); ++i)
      edges.emplace_back(nr.nodes[i], nr.nodes[i + 1]);
    out.sources.insert(nr.source);
    out.destinations.insert(nr.destination);
    out.routes.push_back(std::move(nr));
  }
  out.stats.routes_kept = out.routes.size();
  out.stats.build = BuildReport{};
  out.topology = build_topology(edges, out.labels.size(), &out.stats.build);
  return out;
}

void write_edge_list(const Topology& t, std::ostream& out, const LabelMap* labels) {
  for (NodeId u = 0; u < t.node_count(); ++u) {
    for (NodeId v : t.neighbors(u)) {
      if (v < u) continue;
      if (labels)
        out << labels->label(u) << ' ' << labels->label(v) << '\n';
      else
        out << u << ' ' << v << '\n';
    }
  }
}

void write_traces(std::span<const Route> routes, std::ostream& out, const LabelMap* labels) {
  for (const auto& r : routes) {
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
      if (i) out << ' ';
      if (labels)
        out << labels->label(r.nodes[i]);
      else
        out << r.nodes[i];
    }
    out << '\n';
  }
}

}  // namespace routesim
