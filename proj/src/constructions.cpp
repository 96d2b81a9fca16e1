#include "harris/constructions.hpp"

#include <algorithm>
#include <vector>

namespace harris {

SubdividedGraph subdivide_edge_by_w5(const Graph& g, Edge e) {
  if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order() || !g.adjacent(e.u, e.v)) {
    throw GraphError("{" + std::to_string(e.u) + "," + std::to_string(e.v) +
                     "} is not an edge of the graph");
  }
  if (g.order() + 5 > kMaxOrder) throw CeilingExceeded("subdivided graph exceeds 64 vertices");

  SubdividedGraph out{g, {}};
  Graph& h = out.graph;
  W5Subdivision& w = out.w5;
  h.remove_edge(e.u, e.v);
  w.hub = h.add_vertex();
  for (Vertex& r : w.rim) r = h.add_vertex();
  for (int i = 0; i < 4; ++i) {
    h.add_edge(w.hub, w.rim[i]);
    h.add_edge(w.rim[i], w.rim[(i + 1) % 4]);
  }
  w.attach_x = w.rim[0];
  w.attach_y = w.rim[2];
  w.free_pair = {w.rim[1], w.rim[3]};
  h.add_edge(e.u, w.attach_x);
  h.add_edge(e.v, w.attach_y);
  return out;
}

Graph graft(const Graph& g, Edge eg, const Graph& h, Edge eh) {
  if (g.order() + h.order() + 10 > kMaxOrder) {
    throw CeilingExceeded("grafted graph exceeds 64 vertices");
  }
  const auto left = subdivide_edge_by_w5(g, eg);
  const auto right = subdivide_edge_by_w5(h, eh);
  Graph out = left.graph.disjoint_union(right.graph);
  const int shift = left.graph.order();
  for (int i = 0; i < 2; ++i) out.add_edge(left.w5.free_pair[i], right.w5.free_pair[i] + shift);
  return out;
}

Graph flower(const Graph& g) {
  if (!is_connected(g)) throw GraphError("flowering needs a connected graph");
  Graph h = g;
  auto odd_vertices = [&h] {
    VertexSet odd = 0;
    for (Vertex v = 0; v < h.order(); ++v) {
      if (h.degree(v) % 2 != 0) odd |= bit(v);
    }
    return odd;
  };

  for (VertexSet odd = odd_vertices(); odd != 0; odd = odd_vertices()) {
    const Vertex start = lowest(odd);

    // BFS by levels; parents are the lowest-id discoverer.
    std::vector<Vertex> parent(static_cast<std::size_t>(h.order()), -1);
    VertexSet seen = bit(start);
    VertexSet frontier = seen;
    Vertex partner = -1;
    while (frontier != 0 && partner < 0) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f != 0; f &= f - 1) {
        const Vertex u = lowest(f);
        for (VertexSet r = h.neighbors(u) & ~seen & ~next; r != 0; r &= r - 1) {
          parent[lowest(r)] = u;
        }
        next |= h.neighbors(u) & ~seen;
      }
      seen |= next;
      frontier = next;
      if (next & odd) partner = lowest(next & odd);
    }

    std::vector<Vertex> path{partner};
    while (path.back() != start) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());

    // Chase parity along the path: each barnacle fixes its first endpoint and flips
    // the second; stop once the flipped vertex was odd to begin with.
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const bool next_was_odd = h.degree(path[i + 1]) % 2 != 0;
      const Vertex c = h.add_vertex();
      h.add_edge(path[i], c);
      h.add_edge(c, path[i + 1]);
      if (next_was_odd) break;
    }
  }
  return h;
}

}  // namespace harris
