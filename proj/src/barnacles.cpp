#include "harris/barnacles.hpp"

#include <algorithm>

namespace harris {

BarnacleScan scan_barnacles(const Graph& g) {
  BarnacleScan scan;
  VertexSet two = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 2) two |= bit(v);
  }

  VertexSet visited = 0;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (two & bit(x)) continue;
    for (VertexSet r = g.neighbors(x) & two & ~visited; r != 0; r &= r - 1) {
      const Vertex first = lowest(r);
      if (visited & bit(first)) continue;  // reached from the other side of a parallel chain
      std::vector<Vertex> chain{first};
      Vertex prev = x;
      Vertex cur = first;
      Vertex end = -1;
      while (true) {
        const Vertex next = lowest(g.neighbors(cur) & ~bit(prev));
        if (!(two & bit(next))) {
          end = next;
          break;
        }
        chain.push_back(next);
        prev = cur;
        cur = next;
      }
      for (Vertex v : chain) visited |= bit(v);

      if (end == x) {
        scan.diagnostics.push_back({BarnacleDiagnostic::Kind::Loop, chain, x});
        continue;
      }
      Barnacle b{x, end, std::move(chain)};
      if (b.x > b.y) {
        std::swap(b.x, b.y);
        std::reverse(b.internal.begin(), b.internal.end());
      }
      scan.barnacles.push_back(std::move(b));
    }
  }

  for (VertexSet rest = two & ~visited; rest != 0;) {
    const VertexSet comp = reach(g.adjacency(), two, lowest(rest));
    scan.diagnostics.push_back({BarnacleDiagnostic::Kind::CycleComponent, members(comp), -1});
    rest &= ~comp;
  }

  auto smallest = [](const Barnacle& b) {
    return *std::min_element(b.internal.begin(), b.internal.end());
  };
  std::sort(scan.barnacles.begin(), scan.barnacles.end(),
            [&](const Barnacle& a, const Barnacle& b) { return smallest(a) < smallest(b); });
  return scan;
}

std::vector<Barnacle> find_barnacles(const Graph& g) { return scan_barnacles(g).barnacles; }

bool is_barnacle_free(const Graph& g) { return find_barnacles(g).empty(); }

void validate_barnacle(const Graph& g, const Barnacle& b) {
  const int n = g.order();
  auto fail = [](const std::string& why) { throw GraphError("invalid barnacle: " + why); };
  auto in_range = [n](Vertex v) { return v >= 0 && v < n; };

  if (!in_range(b.x) || !in_range(b.y)) fail("endpoint out of range");
  if (b.x == b.y) fail("endpoints coincide");
  if (b.internal.empty()) fail("no internal vertex");
  if (g.degree(b.x) == 2 || g.degree(b.y) == 2) fail("endpoint has degree 2 (not maximal)");

  VertexSet seen = bit(b.x) | bit(b.y);
  Vertex prev = b.x;
  for (Vertex v : b.internal) {
    if (!in_range(v)) fail("internal vertex out of range");
    if (seen & bit(v)) fail("vertex repeated");
    seen |= bit(v);
    if (g.degree(v) != 2) fail("internal vertex " + std::to_string(v) + " does not have degree 2");
    if (!g.adjacent(prev, v)) {
      fail("missing edge {" + std::to_string(prev) + "," + std::to_string(v) + "}");
    }
    prev = v;
  }
  if (!g.adjacent(prev, b.y)) {
    fail("missing edge {" + std::to_string(prev) + "," + std::to_string(b.y) + "}");
  }
}

Graph simplify_barnacle(const Graph& g, const Barnacle& b) {
  validate_barnacle(g, b);
  if (b.k() <= 2) throw GraphError("barnacle already has length 2; nothing to simplify");
  Graph h = g;
  h.add_edge(b.internal.front(), b.y);
  VertexSet drop = 0;
  for (std::size_t i = 1; i < b.internal.size(); ++i) drop |= bit(b.internal[i]);
  return h.induced(h.vertices() & ~drop);
}

Graph grow_barnacle(const Graph& g, const Barnacle& b, int extra) {
  validate_barnacle(g, b);
  if (extra < 1) throw GraphError("grow_barnacle needs extra >= 1");
  if (g.order() + extra > kMaxOrder) throw CeilingExceeded("grown graph exceeds 64 vertices");
  Graph h = g;
  Vertex prev = b.internal.back();
  h.remove_edge(prev, b.y);
  for (int i = 0; i < extra; ++i) {
    const Vertex v = h.add_vertex();
    h.add_edge(prev, v);
    prev = v;
  }
  h.add_edge(prev, b.y);
  return h;
}

Graph simplify_all(const Graph& g) {
  Graph cur = g;
  while (true) {
    const auto barnacles = find_barnacles(cur);
    const auto it = std::find_if(barnacles.begin(), barnacles.end(),
                                 [](const Barnacle& b) { return b.k() > 2; });
    if (it == barnacles.end()) return cur;
    cur = simplify_barnacle(cur, *it);
  }
}

}  // namespace harris
