#pragma once

#include <map>
#include <string>
#include <vector>

#include "harris/graph.hpp"

namespace harris {

/// A family member together with the named vertices the next step needs.
struct LabeledFamilyState {
  std::string family;
  Graph graph;
  std::map<std::string, Vertex> roles;
  int step = 0;

  /// Throws GraphError when the role is missing.
  Vertex role(const std::string& name) const;
};

/// Order-7 Harris graph labeled A, B, C, v1..v4.
///   C is universal (degree 6), A ~ C, B is adjacent to exactly A and C,
///   v1-v2-v3-v4 is a path, A ~ v2, A ~ v3 and A is not adjacent to v4.
LabeledFamilyState hirotaka_base();

/// Adds v_{k+1}, v_{k+2} and the edges {v_k,v_{k+1}}, {v_{k+1},v_{k+2}},
/// {A,v_k}, {A,v_{k+1}}, {C,v_{k+1}}, {C,v_{k+2}}.
LabeledFamilyState hirotaka_step(const LabeledFamilyState& state);

/// Order-9, 14-edge Harris graph: a K4 on d1, e1, d2, e2 hung from the hub a by
/// the paths a-b1-d1, a-c1-t1-e1, a-b2-d2 and the edge a-e2.
LabeledFamilyState shaw_base();

/// Adds b_{k+1}, c_{k+1}, d_{k+1}, e_{k+1}: a new K4 on d_k, e_k, d_{k+1}, e_{k+1}
/// and the 2-barnacles a-b_{k+1}-d_{k+1}, a-c_{k+1}-e_{k+1}.
LabeledFamilyState shaw_step(const LabeledFamilyState& state);

/// Two n-cycles a_i, b_i with rungs a_i-b_i and a 2-barnacle a_i-m_i-b_i beside
/// each rung. Vertex ids: a_i = i, b_i = n + i, m_i = 2n + i (i from 0).
Graph justine(int n);
LabeledFamilyState justine_labeled(int n);

/// Base followed by `steps` iterations.
std::vector<LabeledFamilyState> hirotaka_family(int steps);
std::vector<LabeledFamilyState> shaw_family(int steps);

}  // namespace harris
