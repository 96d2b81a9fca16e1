#pragma once

#include <array>

#include "harris/graph.hpp"

namespace harris {

/// Roles of the five vertices inserted by subdivide_edge_by_w5.
struct W5Subdivision {
  Vertex hub = -1;
  std::array<Vertex, 4> rim{};  // 4-cycle order
  Vertex attach_x = -1;         // rim[0], joined to the former edge's x
  Vertex attach_y = -1;         // rim[2], joined to the former edge's y
  std::array<Vertex, 2> free_pair{};  // rim[1], rim[3]; degree 3
};

struct SubdividedGraph {
  Graph graph;
  W5Subdivision w5;
};

/// Replaces edge {x,y} by a 5-wheel whose opposite rim vertices attach to x and y.
/// The wheel takes vertex ids n..n+4 (hub first).
SubdividedGraph subdivide_edge_by_w5(const Graph& g, Edge e);

/// Subdivides eg in g and eh in h by 5-wheels, then joins the two free pairs
/// (lower rim id to lower rim id). h's vertices are shifted by |g| + 5.
Graph graft(const Graph& g, Edge eg, const Graph& h, Edge eh);

/// Adds 2-barnacles along shortest paths between odd vertices until every degree is
/// even. Tie-breaks: lowest odd vertex first, nearest odd partner by BFS level then
/// id, path from BFS parents (lowest-id discoverer). New vertices are appended.
Graph flower(const Graph& g);

}  // namespace harris
