#include <doctest.h>

#include <random>

#include "harris/graph6.hpp"
#include "harris/properties.hpp"
#include "oracles.hpp"

using namespace harris;

namespace {

const char* kOrder7 = "F@U^w";

void check_witnesses(const Graph& g, const HarrisVerdict& v) {
  if (v.toughness && v.toughness->violating_set) {
    const VertexSet s = *v.toughness->violating_set;
    CHECK_FALSE(v.toughness->tough);
    CHECK(oracle::components(g, s) > popcount(s));
    CHECK(oracle::components(g, s) == v.toughness->components);
  }
  if (v.hamiltonicity && v.hamiltonicity->cycle) {
    CHECK(v.hamiltonicity->hamiltonian);
    CHECK(is_hamiltonian_cycle(g, *v.hamiltonicity->cycle));
  }
  if (v.eulerian.odd_vertex) CHECK(g.degree(*v.eulerian.odd_vertex) % 2 == 1);
  if (v.eulerian.disconnection) {
    auto d = bfs_distances(g, v.eulerian.disconnection->u);
    CHECK(d[v.eulerian.disconnection->v] == -1);
  }
}

}  // namespace

TEST_CASE("is_eulerian examples") {
  CHECK(is_eulerian(cycle_graph(5)).eulerian);
  auto p3 = is_eulerian(path_graph(3));
  CHECK_FALSE(p3.eulerian);
  REQUIRE(p3.odd_vertex);
  CHECK(path_graph(3).degree(*p3.odd_vertex) == 1);
  auto two = is_eulerian(cycle_graph(3).disjoint_union(cycle_graph(3)));
  CHECK_FALSE(two.eulerian);
  REQUIRE(two.disconnection);
  CHECK_FALSE(two.odd_vertex);
  CHECK(is_eulerian(Graph(1)).eulerian);
}

TEST_CASE("is_tough examples") {
  CHECK(is_tough(cycle_graph(6)).tough);
  auto star = is_tough(star_graph(3));
  CHECK_FALSE(star.tough);
  REQUIRE(star.violating_set);
  CHECK(*star.violating_set == bit(0));
  CHECK(star.components == 3);
  CHECK(is_tough(petersen_graph()).tough);
  CHECK(is_tough(Graph(1)).tough);
  auto split = is_tough(Graph(2));
  CHECK_FALSE(split.tough);
  CHECK(split.violating_set == VertexSet{0});
  CHECK_THROWS_AS(is_tough(complete_graph(kToughnessMaxOrder + 1)), CeilingExceeded);
}

TEST_CASE("find_hamiltonian_cycle examples") {
  auto c6 = find_hamiltonian_cycle(cycle_graph(6));
  REQUIRE(c6.cycle);
  CHECK(is_hamiltonian_cycle(cycle_graph(6), *c6.cycle));
  auto k4 = find_hamiltonian_cycle(complete_graph(4));
  REQUIRE(k4.cycle);
  CHECK(k4.cycle->size() == 4);
  CHECK_FALSE(find_hamiltonian_cycle(petersen_graph()).hamiltonian);
  CHECK_FALSE(find_hamiltonian_cycle(Graph(1)).hamiltonian);
  CHECK_FALSE(find_hamiltonian_cycle(path_graph(2)).hamiltonian);
  CHECK_FALSE(is_hamiltonian_cycle(cycle_graph(4), {0, 1, 2}));
  CHECK_FALSE(is_hamiltonian_cycle(cycle_graph(4), {0, 2, 1, 3}));
}

TEST_CASE("is_harris examples") {
  Graph g = parse_graph6(kOrder7);
  auto v = is_harris(g);
  CHECK(v.is_harris);
  CHECK(v.eulerian.eulerian);
  CHECK(v.toughness->tough);
  CHECK_FALSE(v.hamiltonicity->hamiltonian);

  auto c5 = is_harris(cycle_graph(5));
  CHECK_FALSE(c5.is_harris);
  CHECK(c5.hamiltonicity->hamiltonian);

  auto star = is_harris(star_graph(3));
  CHECK_FALSE(star.is_harris);
  CHECK_FALSE(star.eulerian.eulerian);
  CHECK_FALSE(star.toughness->tough);

  auto quick = is_harris(star_graph(3), false);
  CHECK_FALSE(quick.is_harris);
  CHECK_FALSE(quick.toughness);
  CHECK_FALSE(quick.hamiltonicity);

  // Degenerate orders are never Harris.
  CHECK_FALSE(is_harris(Graph(1)).is_harris);
  CHECK_FALSE(is_harris(Graph(2)).is_harris);
}

TEST_CASE("sigma2 and the Jung shortcut") {
  CHECK_FALSE(sigma2(complete_graph(5)));
  CHECK(sigma2(cycle_graph(5)) == 4);
  CHECK(sigma2(star_graph(3)) == 2);
  CHECK(jung_shortcut(cycle_graph(10)) == JungResult::Unknown);
  CHECK(jung_shortcut(complete_graph(10)) == JungResult::Unknown);

  // Complement of a perfect matching on 12 vertices: tough, sigma2 = 20 >= 8.
  Graph g = complete_graph(12);
  for (int i = 0; i < 12; i += 2) g.remove_edge(i, i + 1);
  CHECK(jung_shortcut(g) == JungResult::HamiltonianByLemma);
  CHECK(jung_shortcut(g, false) == JungResult::Unknown);
  CHECK(find_hamiltonian_cycle(g).hamiltonian);

  // Any graph with minimum degree 4 on n <= 12 vertices clears sigma2 >= n - 4.
  Graph c12sq(12);
  for (int i = 0; i < 12; ++i) {
    c12sq.add_edge(i, (i + 1) % 12);
    c12sq.add_edge(i, (i + 2) % 12);
  }
  REQUIRE(sigma2(c12sq));
  CHECK(*sigma2(c12sq) >= 8);
  CHECK(jung_shortcut(c12sq) == JungResult::HamiltonianByLemma);
}

TEST_CASE("oracle equivalence on every graph with n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
      Graph g(n);
      int bitpos = 0;
      for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bitpos) {
          if ((mask >> bitpos) & 1U) g.add_edge(i, j);
        }
      }
      const auto v = is_harris(g);
      CHECK(v.eulerian.eulerian == oracle::eulerian(oracle::matrix(g)));
      CHECK(v.toughness->tough == oracle::tough(g));
      CHECK(v.hamiltonicity->hamiltonian == oracle::hamiltonian(g));
      CHECK(v.is_harris == oracle::harris(g));
      check_witnesses(g, v);
    }
  }
}

TEST_CASE("oracle equivalence on random graphs with n = 7..9") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 7 + trial % 3;
    Graph g = oracle::random_graph(rng, n, 0.25 + 0.1 * (trial % 5));
    const auto v = is_harris(g);
    CHECK(v.toughness->tough == oracle::tough(g));
    CHECK(v.hamiltonicity->hamiltonian == oracle::hamiltonian(g));
    check_witnesses(g, v);
    CHECK(exhaustive_hamiltonian_cycle(g).hamiltonian == v.hamiltonicity->hamiltonian);
  }
}

TEST_CASE("DP and backtracking agree across the order boundary") {
  // Sparse even graphs near 24 vertices exercise both searches.
  std::mt19937 rng(202);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 20 + trial % 10;
    Graph g = oracle::random_connected_graph(rng, n, 3.0 / n);
    auto v = exhaustive_hamiltonian_cycle(g);
    if (v.cycle) CHECK(is_hamiltonian_cycle(g, *v.cycle));
    auto h = heuristic_hamiltonian_cycle(g);
    if (h) {
      CHECK(is_hamiltonian_cycle(g, *h));
      CHECK(v.hamiltonian);
    }
  }
  // Two Petersen graphs joined by a pair of edges: 20 vertices, not Hamiltonian.
  Graph two = petersen_graph().disjoint_union(petersen_graph());
  two.add_edge(0, 10);
  two.add_edge(5, 15);
  CHECK_FALSE(find_hamiltonian_cycle(two).hamiltonian);
  CHECK_THROWS_AS(exhaustive_hamiltonian_cycle(cycle_graph(kHamiltonMaxOrder + 1)), CeilingExceeded);
  // Cheap rejections stay definitive above the ceiling.
  CHECK_FALSE(exhaustive_hamiltonian_cycle(path_graph(kHamiltonMaxOrder + 1)).hamiltonian);
}

TEST_CASE("tough graphs on three or more vertices have no cut vertex") {
  std::mt19937 rng(303);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = oracle::random_connected_graph(rng, 3 + trial % 10, 0.3);
    if (is_tough(g).tough) CHECK(is_biconnected(g));
  }
}

TEST_CASE("toughness search never needs sets larger than (n-1)/2") {
  // A violating set S needs c(G-S) >= |S|+1 and c(G-S) <= n-|S|.
  std::mt19937 rng(404);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 8;
    Graph g = oracle::random_connected_graph(rng, n, 0.2);
    for (std::uint32_t s = 1; s < (1U << n); ++s) {
      const int size = popcount(s);
      if (oracle::components(g, s) > size) CHECK(size <= (n - 1) / 2);
    }
  }
}

TEST_CASE("Jung shortcut never contradicts the exhaustive search") {
  std::mt19937 rng(505);
  int fired = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 11 + trial % 3;
    Graph g = oracle::random_graph(rng, n, 0.6);
    if (jung_shortcut(g) == JungResult::HamiltonianByLemma) {
      ++fired;
      CHECK(exhaustive_hamiltonian_cycle(g).hamiltonian);
    }
  }
  CHECK(fired > 50);
}
