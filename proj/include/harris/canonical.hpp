#pragma once

#include <compare>
#include <string>
#include <vector>

#include "harris/graph.hpp"

namespace harris {

/// Highest order accepted by canonical_form. The search itself is exact at any
/// order; the ceiling bounds worst-case running time on highly regular inputs.
inline constexpr int kCanonicalMaxOrder = 40;

/// Isomorphism-class fingerprint: the graph6 text of the canonically relabeled
/// graph. The order is carried in the graph6 header.
struct CanonicalForm {
  std::string bytes;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  std::vector<Vertex> labeling;  // labeling[v] = canonical label of v
  Graph graph;                   // g relabeled by `labeling`
  CanonicalForm form;
  std::size_t leaves = 0;        // search-tree leaves visited
  std::size_t automorphisms = 0; // generators discovered while searching
};

CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace harris
