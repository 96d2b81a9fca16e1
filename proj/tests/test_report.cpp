#include <doctest.h>

#include "harris/families.hpp"
#include "harris/graph6.hpp"
#include "harris/report.hpp"

using namespace harris;

TEST_CASE("check report for a Harris graph") {
  auto r = check_report("F@U^w", parse_graph6("F@U^w"));
  auto j = nlohmann::json::parse(r.dump());
  CHECK(j == r);
  CHECK(j["harris"] == true);
  CHECK(j["eulerian"] == true);
  CHECK(j["tough"] == true);
  CHECK(j["hamiltonian"] == false);
  CHECK(j["order"] == 7);
  CHECK(j["edges"] == 12);
  CHECK(j["degree_sequence"] == nlohmann::json::array({6, 4, 4, 4, 2, 2, 2}));
  CHECK(j["witnesses"].empty());
  CHECK(j["barnacles"].size() == 3);
  CHECK(j["barnacles"][0]["k"] == 2);
}

TEST_CASE("check report witnesses replay") {
  Graph c5 = cycle_graph(5);
  auto r = check_report(emit_graph6(c5), c5);
  CHECK(r["harris"] == false);
  CHECK(r["hamiltonian"] == true);
  auto cycle = r["witnesses"]["hamiltonian_cycle"].get<std::vector<Vertex>>();
  CHECK(is_hamiltonian_cycle(c5, cycle));

  Graph star = star_graph(3);
  auto s = check_report(emit_graph6(star), star);
  CHECK(s["witnesses"]["violating_set"] == nlohmann::json::array({0}));
  CHECK(star.degree(s["witnesses"]["odd_vertex"].get<int>()) % 2 == 1);

  auto quick = make_report("x", star, is_harris(star, false));
  CHECK(quick["tough"].is_null());
  CHECK(quick["hamiltonian"].is_null());
}

TEST_CASE("family state serialization") {
  auto j = to_json(hirotaka_base());
  CHECK(j["family"] == "hirotaka");
  CHECK(j["step"] == 0);
  CHECK(j["order"] == 7);
  CHECK(j["roles"]["C"] == 2);
  CHECK(parse_graph6(j["graph6"].get<std::string>()) == hirotaka_base().graph);
}
