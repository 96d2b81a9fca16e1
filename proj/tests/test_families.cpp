#include <doctest.h>

#include "harris/canonical.hpp"
#include "harris/families.hpp"
#include "harris/graph6.hpp"
#include "harris/properties.hpp"
#include "oracles.hpp"

using namespace harris;

namespace {

bool all_even(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) % 2) return false;
  }
  return true;
}

void check_role_invariants(const LabeledFamilyState& s) {
  VertexSet seen = 0;
  for (const auto& [name, v] : s.roles) {
    CHECK(v >= 0);
    CHECK(v < s.graph.order());
    CHECK((seen & bit(v)) == 0);
    seen |= bit(v);
  }
}

}  // namespace

TEST_CASE("Hirotaka base") {
  auto s = hirotaka_base();
  CHECK(s.graph.order() == 7);
  CHECK(degree_sequence(s.graph).str() == "6-4-4-4-2-2-2");
  CHECK(isomorphic(s.graph, parse_graph6("F@U^w")));
  const Vertex a = s.role("A"), b = s.role("B"), c = s.role("C");
  CHECK(s.graph.adjacent(a, c));
  CHECK(s.graph.neighbors(b) == (bit(a) | bit(c)));
  CHECK_FALSE(s.graph.adjacent(a, s.role("v4")));
  CHECK_THROWS_AS(s.role("v5"), GraphError);
}

TEST_CASE("Hirotaka steps") {
  auto family = hirotaka_family(3);
  REQUIRE(family.size() == 4);
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& s = family[i];
    CHECK(s.step == static_cast<int>(i));
    CHECK(s.graph.order() == 7 + 2 * static_cast<int>(i));
    CHECK(is_harris(s.graph).is_harris);
    check_role_invariants(s);
    const Vertex a = s.role("A"), c = s.role("C");
    CHECK((s.graph.neighbors(a) | s.graph.neighbors(c) | bit(a) | bit(c)) == s.graph.vertices());
    if (i == 0) continue;
    const auto& prev = family[i - 1];
    CHECK(s.graph.edge_count() == prev.graph.edge_count() + 6);
    CHECK(s.graph.degree(a) == prev.graph.degree(a) + 2);
    CHECK(s.graph.degree(c) == prev.graph.degree(c) + 2);
    const int k = 4 + 2 * static_cast<int>(i);
    const Vertex vk = s.role("v" + std::to_string(k));
    const Vertex vk1 = s.role("v" + std::to_string(k - 1));
    CHECK(s.graph.adjacent(a, s.role("B")));
    CHECK(s.graph.adjacent(s.role("B"), c));
    CHECK(s.graph.adjacent(c, vk));
    CHECK(s.graph.adjacent(vk, vk1));
    CHECK(all_even(s.graph));
  }
}

TEST_CASE("Hirotaka step rejects foreign states") {
  auto s = hirotaka_base();
  auto broken = s;
  broken.roles.erase("B");
  CHECK_THROWS_AS(hirotaka_step(broken), GraphError);
  CHECK_THROWS_AS(hirotaka_step(shaw_base()), GraphError);
  auto stepped = s;
  stepped.step = 1;
  CHECK_THROWS_AS(hirotaka_step(stepped), GraphError);
}

TEST_CASE("Shaw base") {
  auto s = shaw_base();
  CHECK(s.graph.order() == 9);
  CHECK(s.graph.edge_count() == 14);
  CHECK(degree_sequence(s.graph).str() == "4-4-4-4-4-2-2-2-2");
  CHECK(is_harris(s.graph).is_harris);
  check_role_invariants(s);
  CHECK(s.graph.adjacent(s.role("d2"), s.role("e2")));
}

TEST_CASE("Shaw step") {
  auto family = shaw_family(2);
  const auto& base = family[0];
  const auto& one = family[1];
  CHECK(one.graph.order() == 13);
  CHECK(one.graph.edge_count() == 23);
  CHECK(all_even(one.graph));
  CHECK(is_harris(one.graph).is_harris);
  CHECK(one.graph.degree(one.role("a")) == base.graph.degree(base.role("a")) + 2);
  CHECK(one.graph.degree(one.role("d2")) == base.graph.degree(base.role("d2")) + 2);
  CHECK(one.graph.degree(one.role("e2")) == base.graph.degree(base.role("e2")) + 2);
  for (const char* r : {"d2", "e2", "d3", "e3"}) {
    for (const char* q : {"d2", "e2", "d3", "e3"}) {
      if (std::string(r) != q) CHECK(one.graph.adjacent(one.role(r), one.role(q)));
    }
  }
  check_role_invariants(one);

  // The literal second iteration stays Eulerian but loses toughness: removing a and
  // the previous outer pair isolates the two old barnacle midpoints.
  const auto& two = family[2];
  CHECK(two.graph.order() == 17);
  CHECK(all_even(two.graph));
  const VertexSet s = bit(two.role("a")) | bit(two.role("d3")) | bit(two.role("e3"));
  CHECK(oracle::components(two.graph, s) == 4);
  CHECK_FALSE(is_tough(two.graph).tough);
}

TEST_CASE("Justine graphs") {
  for (int n : {3, 5}) {
    Graph g = justine(n);
    CHECK(g.order() == 3 * n);
    int twos = 0, fours = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      twos += g.degree(v) == 2;
      fours += g.degree(v) == 4;
    }
    CHECK(twos == n);
    CHECK(fours == 2 * n);
    CHECK(is_harris(g).is_harris);
  }
  for (int n : {7, 9, 11, 13}) {
    Graph g = justine(n);
    CHECK(all_even(g));
    CHECK(degree_sequence(g).degrees.back() == 2);
  }
  CHECK_THROWS_AS(justine(4), GraphError);
  CHECK_THROWS_AS(justine(1), GraphError);
  auto labeled = justine_labeled(3);
  CHECK(labeled.graph.adjacent(labeled.role("a1"), labeled.role("b1")));
  CHECK(labeled.graph.adjacent(labeled.role("a1"), labeled.role("m1")));
  CHECK(labeled.graph.adjacent(labeled.role("m1"), labeled.role("b1")));
}
