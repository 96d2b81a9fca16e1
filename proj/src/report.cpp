#include "harris/report.hpp"

#include "harris/graph6.hpp"

namespace harris {

nlohmann::json to_json(const Barnacle& b) {
  return {{"x", b.x}, {"y", b.y}, {"internal", b.internal}, {"k", b.k()}};
}

nlohmann::json make_report(const std::string& input, const Graph& g, const HarrisVerdict& verdict) {
  nlohmann::json witnesses = nlohmann::json::object();
  if (verdict.eulerian.odd_vertex) witnesses["odd_vertex"] = *verdict.eulerian.odd_vertex;
  if (verdict.eulerian.disconnection) {
    witnesses["disconnection"] = {verdict.eulerian.disconnection->u, verdict.eulerian.disconnection->v};
  }
  if (verdict.toughness && verdict.toughness->violating_set) {
    witnesses["violating_set"] = members(*verdict.toughness->violating_set);
  }
  if (verdict.hamiltonicity && verdict.hamiltonicity->cycle) {
    witnesses["hamiltonian_cycle"] = *verdict.hamiltonicity->cycle;
  }

  nlohmann::json barnacles = nlohmann::json::array();
  for (const auto& b : find_barnacles(g)) barnacles.push_back(to_json(b));

  nlohmann::json report = {
      {"input", input},
      {"order", g.order()},
      {"edges", g.edge_count()},
      {"eulerian", verdict.eulerian.eulerian},
      {"tough", nullptr},
      {"hamiltonian", nullptr},
      {"harris", verdict.is_harris},
      {"witnesses", witnesses},
      {"barnacles", barnacles},
      {"degree_sequence", degree_sequence(g).degrees},
  };
  if (verdict.toughness) report["tough"] = verdict.toughness->tough;
  if (verdict.hamiltonicity) report["hamiltonian"] = verdict.hamiltonicity->hamiltonian;
  return report;
}

nlohmann::json check_report(const std::string& input, const Graph& g) {
  return make_report(input, g, is_harris(g, true));
}

nlohmann::json to_json(const LabeledFamilyState& state) {
  nlohmann::json roles = nlohmann::json::object();
  for (const auto& [name, v] : state.roles) roles[name] = v;
  return {{"family", state.family},
          {"step", state.step},
          {"order", state.graph.order()},
          {"graph6", emit_graph6(state.graph)},
          {"roles", roles}};
}

}  // namespace harris
