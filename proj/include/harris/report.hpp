#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "harris/barnacles.hpp"
#include "harris/families.hpp"
#include "harris/properties.hpp"

namespace harris {

/// {x, y, internal, k}
nlohmann::json to_json(const Barnacle& b);

/// Check report for one graph:
///   {input, order, edges, eulerian, tough, hamiltonian, harris,
///    witnesses: {odd_vertex?, disconnection?, violating_set?, hamiltonian_cycle?},
///    barnacles: [...], degree_sequence: [...]}
/// `tough` and `hamiltonian` are null when the verdict short-circuited.
nlohmann::json make_report(const std::string& input, const Graph& g, const HarrisVerdict& verdict);

/// Runs the full Harris check and builds the report.
nlohmann::json check_report(const std::string& input, const Graph& g);

/// {family, step, order, graph6, roles: {name: vertex}}
nlohmann::json to_json(const LabeledFamilyState& state);

}  // namespace harris
