#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "graphs.hpp"
#include "routesim/metrics.hpp"
#include "routesim/synth.hpp"

using namespace routesim;
using namespace testsupport;

TEST_CASE("preferential attachment, smallest case is a triangle") {
  auto t = generate_ba(3, 2, 0);
  CHECK(t == complete_graph(3));
}

TEST_CASE("preferential attachment edge count is closed-form") {
  auto t = generate_ba(1000, 3, 1);
  CHECK(t.node_count() == 1000);
  CHECK(t.edge_count() == 2994);
  for (NodeId v = 0; v < t.node_count(); ++v) CHECK(t.degree(v) >= 3);

  auto t2 = generate_ba(50, 5, 9);
  CHECK(t2.edge_count() == 5 * (2 * 50 - 5 - 1) / 2);
}

TEST_CASE("preferential attachment is reproducible") {
  auto a = generate_ba(400, 3, 123);
  auto b = generate_ba(400, 3, 123);
  CHECK(a == b);
  auto c = generate_ba(400, 3, 124);
  CHECK_FALSE(a == c);
}

TEST_CASE("preferential attachment rejects bad sizes") {
  CHECK_THROWS_AS(generate_ba(3, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(generate_ba(10, 0, 0), std::invalid_argument);
}

TEST_CASE("preferential attachment degree tail fits a power law") {
  auto t = generate_ba(5000, 3, 2);
  auto m = compute_metrics(t);
  REQUIRE(m.gamma.has_value());
  CHECK(*m.gamma >= 2.0);
  CHECK(*m.gamma <= 3.5);
}

TEST_CASE("random pairs graph, degenerate probabilities") {
  auto full = generate_er(6, 1.0, 0);
  CHECK(full == complete_graph(6));
  CHECK_THROWS_WITH_AS(generate_er(6, 0.0, 0), doctest::Contains("empty graph"),
                       std::runtime_error);
}

TEST_CASE("random pairs graph matches its expected degree") {
  auto t = generate_er(2000, 0.005, 3);
  CHECK(t.node_count() == 2000);
  double expected = 1999.0 * 0.005;
  CHECK(std::abs(average_degree(t) - expected) / expected < 0.10);
}

TEST_CASE("random pairs graph is reproducible") {
  auto a = generate_er(300, 0.02, 55);
  auto b = generate_er(300, 0.02, 55);
  CHECK(a == b);
}

TEST_CASE("attachment graphs carry more degree spread than uniform ones") {
  double ba_sum = 0.0, er_sum = 0.0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto ba = generate_ba(800, 3, s);
    // p chosen so both ensembles share the mean degree
    auto er = generate_er(800, 2.0 * ba.edge_count() / (800.0 * 799.0), s);
    ba_sum += heterogeneity(ba);
    er_sum += heterogeneity(er);
  }
  CHECK(ba_sum / 20.0 > er_sum / 20.0);
}

TEST_CASE("generate dispatches on the requested graph model") {
  GenSpec ba{GraphModel::ba, 200, 3, 0.0, 7};
  CHECK(generate(ba) == generate_ba(200, 3, 7));

  GenSpec er{GraphModel::er, 200, 3, 0.05, 7};
  CHECK(generate(er) == generate_er(200, 0.05, 7));
}
