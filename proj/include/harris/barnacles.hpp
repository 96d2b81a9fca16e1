#pragma once

#include <vector>

#include "harris/graph.hpp"

namespace harris {

/// Maximal path x - internal... - y whose internal vertices all have degree 2 and
/// whose endpoints do not. Oriented so that x < y.
struct Barnacle {
  Vertex x = 0;
  Vertex y = 0;
  std::vector<Vertex> internal;

  /// Path length in edges.
  int k() const { return static_cast<int>(internal.size()) + 1; }

  friend bool operator==(const Barnacle&, const Barnacle&) = default;
};

/// Degree-2 structures that are not barnacles.
struct BarnacleDiagnostic {
  enum class Kind {
    CycleComponent,  // a whole component is a cycle; no endpoint of degree != 2
    Loop,            // chain leaves and re-enters the same anchor vertex
  };
  Kind kind = Kind::CycleComponent;
  std::vector<Vertex> vertices;  // the degree-2 vertices involved
  Vertex anchor = -1;            // Loop only
};

struct BarnacleScan {
  std::vector<Barnacle> barnacles;  // ordered by smallest internal vertex
  std::vector<BarnacleDiagnostic> diagnostics;
};

BarnacleScan scan_barnacles(const Graph& g);
std::vector<Barnacle> find_barnacles(const Graph& g);
bool is_barnacle_free(const Graph& g);

/// Throws GraphError when b is not a maximal barnacle of g.
void validate_barnacle(const Graph& g, const Barnacle& b);

/// Replaces a k-barnacle (k > 2) with a 2-barnacle. The first internal vertex is kept
/// as the middle vertex; the other internal vertices are deleted and the remaining
/// vertices are renumbered in increasing order.
Graph simplify_barnacle(const Graph& g, const Barnacle& b);

/// Subdivides the barnacle's last edge `extra` times. New vertices take ids
/// n..n+extra-1 and sit between the last internal vertex and y.
Graph grow_barnacle(const Graph& g, const Barnacle& b, int extra);

/// Simplifies until every barnacle has k = 2.
Graph simplify_all(const Graph& g);

}  // namespace harris
