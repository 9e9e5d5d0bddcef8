#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "graphs.hpp"
#include "oracles.hpp"
#include "routesim/rng.hpp"
#include "routesim/shortest_path.hpp"
#include "routesim/synth.hpp"

using namespace routesim;
using namespace testsupport;

TEST_CASE("bfs basics") {
  auto tri = complete_graph(3);
  auto r = bfs_path(tri, 0, 2);
  REQUIRE(r);
  CHECK(r->nodes == std::vector<NodeId>{0, 2});
  CHECK(r->hops() == 1);

  auto p3 = path_graph(3);
  CHECK(bfs_path(p3, 0, 2)->nodes == std::vector<NodeId>{0, 1, 2});

  auto self = bfs_path(p3, 1, 1);
  REQUIRE(self);
  CHECK(self->nodes == std::vector<NodeId>{1});
  CHECK(self->hops() == 0);
}

TEST_CASE("bfs tie-break picks the smaller predecessor") {
  auto c4 = cycle_graph(4);
  CHECK(bfs_path(c4, 0, 2)->nodes == std::vector<NodeId>{0, 1, 2});
  CHECK(bfs_path(c4, 2, 0)->nodes == std::vector<NodeId>{2, 1, 0});
}

TEST_CASE("bfs unreachable") {
  std::vector<Edge> e{{0, 1}};
  auto t = build_topology(e, 3);
  CHECK_FALSE(bfs_path(t, 0, 2));
  CHECK(bfs_distances(t, 0)[2] == -1);
}

TEST_CASE("dijkstra avoids the heavy arc") {
  auto tri = complete_graph(3);
  auto w = uniform_weights(tri);
  w.arc[tri.arc_index(0, 2)] = 10.0;
  auto r = dijkstra_path(tri, w, 0, 2);
  REQUIRE(r);
  CHECK(r->nodes == std::vector<NodeId>{0, 1, 2});
}

TEST_CASE("uniform weights reduce to hop counts") {
  auto t = generate_ba(120, 2, 3);
  auto w = uniform_weights(t, 0.5);
  for (NodeId s : {NodeId{0}, NodeId{17}, NodeId{119}}) {
    auto bd = bfs_distances(t, s);
    auto dd = dijkstra_distances(t, w, s);
    for (NodeId d = 0; d < t.node_count(); ++d) {
      auto rb = bfs_path_from_distances(t, bd, s, d);
      auto rd = dijkstra_path_from_distances(t, w, dd, s, d);
      REQUIRE(rb.has_value() == rd.has_value());
      if (rb) CHECK(rb->hops() == rd->hops());
    }
  }
}

TEST_CASE("dijkstra equals exhaustive enumeration on small graphs") {
  auto rng = seeded_rng(17, 0);
  for (int round = 0; round < 60; ++round) {
    std::size_t n = 2 + uniform_below(rng, 7);
    auto t = random_graph(n, 0.45, rng);
    EdgeWeights w;
    w.arc.resize(t.arc_count());
    for (auto& x : w.arc) x = 0.1 + 9.9 * uniform_unit(rng);

    for (NodeId s = 0; s < n; ++s)
      for (NodeId d = 0; d < n; ++d) {
        if (s == d) continue;
        auto got = dijkstra_path(t, w, s, d);
        auto want = exhaustive_min_cost_path(t, w, s, d);
        REQUIRE(got.has_value() == want.has_value());
        if (got) CHECK(got->nodes == *want);
      }
  }
}

TEST_CASE("bfs equals exhaustive hop enumeration with tie-break") {
  auto rng = seeded_rng(18, 0);
  for (int round = 0; round < 40; ++round) {
    std::size_t n = 2 + uniform_below(rng, 7);
    auto t = random_graph(n, 0.4, rng);
    for (NodeId s = 0; s < n; ++s)
      for (NodeId d = 0; d < n; ++d) {
        auto got = bfs_path(t, s, d);
        auto want = exhaustive_min_hop_path(t, s, d);
        REQUIRE(got.has_value() == want.has_value());
        if (got) CHECK(got->nodes == *want);
      }
  }
}

TEST_CASE("routes are simple paths over edges") {
  auto rng = seeded_rng(19, 0);
  auto t = generate_ba(80, 2, 4);
  EdgeWeights w;
  w.arc.resize(t.arc_count());
  for (auto& x : w.arc) x = 0.5 + uniform_unit(rng);

  for (int round = 0; round < 200; ++round) {
    NodeId s = static_cast<NodeId>(uniform_below(rng, 80));
    NodeId d = static_cast<NodeId>(uniform_below(rng, 80));
    auto r = dijkstra_path(t, w, s, d);
    REQUIRE(r);
    CHECK(r->nodes.front() == s);
    CHECK(r->nodes.back() == d);
    std::set<NodeId> seen(r->nodes.begin(), r->nodes.end());
    CHECK(seen.size() == r->nodes.size());
    for (std::size_t i = 0; i + 1 < r->nodes.size(); ++i)
      CHECK(t.has_edge(r->nodes[i], r->nodes[i + 1]));
  }
}

TEST_CASE("routing is invariant under weight rescaling") {
  auto rng = seeded_rng(20, 0);
  auto t = generate_ba(60, 2, 8);
  EdgeWeights w;
  w.arc.resize(t.arc_count());
  for (auto& x : w.arc) x = 0.5 + uniform_unit(rng);

  for (double c : {0.25, 4.0, 1024.0, 3.0}) {
    EdgeWeights sw;
    sw.arc = w.arc;
    for (auto& x : sw.arc) x *= c;
    for (int round = 0; round < 40; ++round) {
      NodeId s = static_cast<NodeId>(uniform_below(rng, 60));
      NodeId d = static_cast<NodeId>(uniform_below(rng, 60));
      auto a = dijkstra_path(t, w, s, d);
      auto b = dijkstra_path(t, sw, s, d);
      REQUIRE(a.has_value() == b.has_value());
      if (a) CHECK(a->nodes == b->nodes);
    }
  }
}

TEST_CASE("dijkstra input validation") {
  auto tri = complete_graph(3);
  EdgeWeights short_w;
  short_w.arc.assign(2, 1.0);
  CHECK_THROWS_AS(dijkstra_path(tri, short_w, 0, 1), std::invalid_argument);

  auto w = uniform_weights(tri);
  w.arc[0] = 0.0;
  CHECK_THROWS_AS(dijkstra_path(tri, w, 0, 1), std::invalid_argument);
  w.arc[0] = -2.0;
  CHECK_THROWS_AS(dijkstra_path(tri, w, 0, 1), std::invalid_argument);
  w.arc[0] = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(dijkstra_path(tri, w, 0, 1), std::invalid_argument);

  auto ok = uniform_weights(tri);
  CHECK_THROWS_AS(dijkstra_path(tri, ok, 0, 9), std::invalid_argument);
  CHECK_THROWS_AS(bfs_path(tri, 9, 0), std::invalid_argument);
}
