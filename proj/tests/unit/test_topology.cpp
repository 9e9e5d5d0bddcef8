#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "routesim/rng.hpp"
#include "routesim/topology.hpp"

using namespace routesim;

TEST_CASE("triangle build") {
  std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}};
  auto t = build_topology(e);
  CHECK(t.node_count() == 3);
  CHECK(t.edge_count() == 3);
  CHECK(t.arc_count() == 6);
  for (NodeId v = 0; v < 3; ++v) CHECK(t.degree(v) == 2);
  CHECK(t.has_edge(0, 2));
  CHECK(t.has_edge(2, 0));
  CHECK_FALSE(t.has_edge(0, 0));
}

TEST_CASE("dedupe and self-loop drop") {
  std::vector<Edge> e{{0, 1}, {0, 1}, {1, 1}};
  BuildReport rep;
  auto t = build_topology(e, &rep);
  CHECK(t.node_count() == 2);
  CHECK(t.edge_count() == 1);
  CHECK(rep.duplicate_edges_dropped == 1);
  CHECK(rep.self_loops_dropped == 1);
}

TEST_CASE("reversed duplicate collapses too") {
  std::vector<Edge> e{{0, 1}, {1, 0}};
  auto t = build_topology(e);
  CHECK(t.edge_count() == 1);
}

TEST_CASE("explicit node count keeps isolated nodes") {
  std::vector<Edge> e{{0, 1}};
  auto t = build_topology(e, 4);
  CHECK(t.node_count() == 4);
  CHECK(t.degree(2) == 0);
  CHECK(t.degree(3) == 0);
  CHECK(t.neighbors(3).empty());
}

TEST_CASE("build errors") {
  std::vector<Edge> none;
  CHECK_THROWS_AS(build_topology(none), std::runtime_error);
  std::vector<Edge> loops{{3, 3}};
  CHECK_THROWS_AS(build_topology(loops), std::runtime_error);
  std::vector<Edge> e{{0, 5}};
  CHECK_THROWS_AS(build_topology(e, 4), std::runtime_error);
}

TEST_CASE("input order does not matter") {
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}};
  auto a = build_topology(e);
  std::mt19937_64 rng(7);
  for (int round = 0; round < 5; ++round) {
    std::shuffle(e.begin(), e.end(), rng);
    for (auto& [u, v] : e)
      if (rng() & 1) std::swap(u, v);
    CHECK(build_topology(e) == a);
  }
}

TEST_CASE("10k random pairs against a set oracle") {
  std::mt19937_64 rng(42);
  std::vector<Edge> e;
  for (int i = 0; i < 10000; ++i) {
    auto u = static_cast<NodeId>(uniform_below(rng, 300));
    auto v = static_cast<NodeId>(uniform_below(rng, 300));
    e.emplace_back(u, v);
  }
  auto t = build_topology(e, 300);

  std::vector<std::set<NodeId>> adj(300);
  for (auto [u, v] : e) {
    if (u == v) continue;
    adj[u].insert(v);
    adj[v].insert(u);
  }
  CHECK(t.edge_count() <= 10000);
  std::size_t degree_sum = 0;
  for (NodeId v = 0; v < 300; ++v) {
    auto nb = t.neighbors(v);
    REQUIRE(nb.size() == adj[v].size());
    CHECK(std::equal(nb.begin(), nb.end(), adj[v].begin()));
    CHECK(std::is_sorted(nb.begin(), nb.end()));
    degree_sum += t.degree(v);
  }
  CHECK(degree_sum == 2 * t.edge_count());
  for (NodeId u = 0; u < 300; ++u)
    for (NodeId v : t.neighbors(u)) CHECK(t.has_edge(v, u));
}

TEST_CASE("arc indexing is canonical") {
  std::vector<Edge> e{{0, 1}, {0, 2}, {1, 2}, {2, 3}};
  auto t = build_topology(e);
  for (NodeId u = 0; u < t.node_count(); ++u) {
    auto nb = t.neighbors(u);
    for (std::size_t i = 0; i < nb.size(); ++i)
      CHECK(t.arc_index(u, nb[i]) == t.arc_offset(u) + i);
  }
  CHECK(t.arc_index(0, 3) == t.arc_count());
  CHECK(t.arc_index(3, 0) == t.arc_count());
}
