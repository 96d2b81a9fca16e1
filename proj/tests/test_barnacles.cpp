#include <doctest.h>

#include <random>

#include "harris/barnacles.hpp"
#include "harris/canonical.hpp"
#include "harris/families.hpp"
#include "harris/graph6.hpp"
#include "harris/properties.hpp"
#include "oracles.hpp"

using namespace harris;

namespace {

const char* kOrder7 = "F@U^w";

// Theta graph: two degree-3 hubs joined by three paths with the given internal counts.
Graph theta(int a, int b, int c) {
  Graph g(2);
  for (int len : {a, b, c}) {
    Vertex prev = 0;
    for (int i = 0; i < len; ++i) {
      Vertex v = g.add_vertex();
      g.add_edge(prev, v);
      prev = v;
    }
    g.add_edge(prev, 1);
  }
  return g;
}

}  // namespace

TEST_CASE("find_barnacles examples") {
  Graph g = parse_graph6(kOrder7);
  auto bs = find_barnacles(g);
  REQUIRE_FALSE(bs.empty());
  for (const auto& b : bs) CHECK(b.k() == 2);
  CHECK(find_barnacles(cycle_graph(6)).empty());
  CHECK(scan_barnacles(cycle_graph(6)).diagnostics.size() == 1);

  Graph grown = grow_barnacle(grow_barnacle(g, bs[0], 1), find_barnacles(grow_barnacle(g, bs[0], 1))[0], 1);
  bool has_four = false;
  for (const auto& b : find_barnacles(grown)) has_four |= b.k() == 4;
  CHECK(has_four);
}

TEST_CASE("barnacle invariants") {
  Graph g = theta(0, 3, 1);  // one edge path, one 4-barnacle, one 2-barnacle
  auto bs = find_barnacles(g);
  REQUIRE(bs.size() == 2);
  CHECK(bs[0].k() == 4);
  CHECK(bs[1].k() == 2);
  for (const auto& b : bs) {
    CHECK(b.x < b.y);
    CHECK(g.degree(b.x) != 2);
    CHECK(g.degree(b.y) != 2);
    std::vector<Vertex> path{b.x};
    path.insert(path.end(), b.internal.begin(), b.internal.end());
    path.push_back(b.y);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) CHECK(g.adjacent(path[i], path[i + 1]));
    for (Vertex v : b.internal) CHECK(g.degree(v) == 2);
  }
}

TEST_CASE("loops on a single anchor are diagnostics, not barnacles") {
  // Triangle 0-1-2 hanging off vertex 0, which also lies on a 4-cycle 0-3-4-5.
  Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}, {5, 0}, {3, 5}});
  auto scan = scan_barnacles(g);
  bool loop = false;
  for (const auto& d : scan.diagnostics) loop |= d.kind == BarnacleDiagnostic::Kind::Loop && d.anchor == 0;
  CHECK(loop);
  for (const auto& b : scan.barnacles) CHECK(b.x != b.y);
}

TEST_CASE("internal vertex sets partition the chained degree-2 vertices") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_connected_graph(rng, 4 + trial % 12, 0.1);
    auto scan = scan_barnacles(g);
    VertexSet seen = 0;
    for (const auto& b : scan.barnacles) {
      for (Vertex v : b.internal) {
        CHECK((seen & bit(v)) == 0);
        seen |= bit(v);
      }
    }
    for (const auto& d : scan.diagnostics) {
      for (Vertex v : d.vertices) {
        CHECK((seen & bit(v)) == 0);
        seen |= bit(v);
      }
    }
    VertexSet deg2 = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) == 2) deg2 |= bit(v);
    }
    CHECK(seen == deg2);
    CHECK(is_barnacle_free(g) == scan.barnacles.empty());
  }
}

TEST_CASE("simplify_barnacle") {
  Graph g = theta(1, 3, 1);
  auto bs = find_barnacles(g);
  auto four = std::find_if(bs.begin(), bs.end(), [](const Barnacle& b) { return b.k() == 4; });
  REQUIRE(four != bs.end());
  Graph s = simplify_barnacle(g, *four);
  CHECK(s.order() == g.order() - 2);
  CHECK(isomorphic(s, theta(1, 1, 1)));

  auto two = std::find_if(bs.begin(), bs.end(), [](const Barnacle& b) { return b.k() == 2; });
  CHECK_THROWS_AS(simplify_barnacle(g, *two), GraphError);

  Barnacle stale = *four;
  Graph changed = g;
  changed.add_edge(stale.internal[0], stale.internal[2]);
  CHECK_THROWS_WITH_AS(simplify_barnacle(changed, stale), doctest::Contains("invalid barnacle"), GraphError);
}

TEST_CASE("grow_barnacle bookkeeping") {
  Graph g = parse_graph6(kOrder7);
  const auto bs = find_barnacles(g);
  for (const auto& b : bs) {
    for (int extra = 1; extra <= 3; ++extra) {
      Graph h = grow_barnacle(g, b, extra);
      CHECK(h.order() == g.order() + extra);
      auto before = degree_sequence(g).degrees;
      for (int i = 0; i < extra; ++i) before.push_back(2);
      std::sort(before.begin(), before.end(), std::greater<>());
      CHECK(degree_sequence(h).degrees == before);
      for (Vertex v = 0; v < g.order(); ++v) CHECK(h.degree(v) == g.degree(v));
      bool found = false;
      for (const auto& nb : find_barnacles(h)) found |= nb.k() == b.k() + extra;
      CHECK(found);
    }
  }
  CHECK_THROWS_AS(grow_barnacle(g, bs[0], 0), GraphError);
}

TEST_CASE("simplify_all reaches an idempotent fixpoint") {
  Graph g = theta(2, 3, 4);
  Graph s = simplify_all(g);
  for (const auto& b : find_barnacles(s)) CHECK(b.k() == 2);
  CHECK(simplify_all(s) == s);
  CHECK(simplify_all(petersen_graph()) == petersen_graph());
  CHECK(is_barnacle_free(petersen_graph()));
  CHECK_FALSE(is_barnacle_free(justine(3)));
}

TEST_CASE("grow then simplify round trip preserves Harris status") {
  Graph g = parse_graph6(kOrder7);
  for (const auto& b : find_barnacles(g)) {
    for (int extra = 1; extra <= 3; ++extra) {
      Graph h = grow_barnacle(g, b, extra);
      CHECK(is_harris(h).is_harris);
      CHECK(isomorphic(simplify_all(h), g));
    }
  }
}
