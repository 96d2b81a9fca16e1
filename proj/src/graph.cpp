#include "harris/graph.hpp"

#include <algorithm>
#include <sstream>

namespace harris {

std::vector<Vertex> members(VertexSet s) {
  std::vector<Vertex> out;
  out.reserve(popcount(s));
  for (; s != 0; s &= s - 1) out.push_back(lowest(s));
  return out;
}

VertexSet to_set(std::span<const Vertex> vs) {
  VertexSet s = 0;
  for (Vertex v : vs) s |= bit(v);
  return s;
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > kMaxOrder) {
    throw GraphError("vertex count " + std::to_string(n) + " outside [0, 64]");
  }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 1) throw GraphError("a graph needs at least one vertex");
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [u, v] : edges) list.push_back({u, v});
  return from_edges(n, list);
}

Graph Graph::from_adjacency(std::span<const VertexSet> rows) {
  Graph g(static_cast<int>(rows.size()));
  const VertexSet all = g.vertices();
  for (Vertex v = 0; v < g.n_; ++v) {
    if ((rows[v] & ~all) != 0 || (rows[v] & bit(v)) != 0) {
      throw GraphError("adjacency row " + std::to_string(v) + " is out of range or has a loop");
    }
    for (VertexSet r = rows[v]; r != 0; r &= r - 1) {
      if (!(rows[lowest(r)] & bit(v))) throw GraphError("adjacency rows are not symmetric");
    }
    g.adj_[v] = rows[v];
  }
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (VertexSet s : adj_) twice += popcount(s);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : members(adj_[u] & ~first_n(u + 1))) out.push_back({u, v});
  }
  return out;
}

void Graph::check_pair(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw GraphError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                     "} has an endpoint outside [0, " + std::to_string(n_) + ")");
  }
  if (u == v) {
    throw GraphError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} is a self-loop");
  }
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

Vertex Graph::add_vertex() {
  if (n_ >= kMaxOrder) throw CeilingExceeded("graphs are limited to 64 vertices");
  adj_.push_back(0);
  return n_++;
}

Graph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  std::vector<Vertex> index(static_cast<std::size_t>(n_), -1);
  int next = 0;
  for (Vertex v : members(keep)) index[v] = next++;
  Graph out(next);
  for (Vertex u : members(keep)) {
    for (Vertex v : members(adj_[u] & keep)) {
      if (u < v) out.add_edge(index[u], index[v]);
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw GraphError("permutation size mismatch");
  Graph out(n_);
  for (const Edge& e : edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

Graph Graph::disjoint_union(const Graph& other) const {
  if (n_ + other.n_ > kMaxOrder) throw CeilingExceeded("disjoint union exceeds 64 vertices");
  Graph out(n_ + other.n_);
  for (const Edge& e : edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : other.edges()) out.add_edge(e.u + n_, e.v + n_);
  return out;
}

std::string DegreeSequence::str() const {
  std::string out;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i) out += '-';
    out += std::to_string(degrees[i]);
  }
  return out;
}

DegreeSequence DegreeSequence::parse(const std::string& text) {
  DegreeSequence seq;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, '-')) seq.degrees.push_back(std::stoi(part));
  std::sort(seq.degrees.begin(), seq.degrees.end(), std::greater<>());
  return seq;
}

DegreeSequence degree_sequence(const Graph& g) {
  DegreeSequence seq;
  for (Vertex v = 0; v < g.order(); ++v) seq.degrees.push_back(g.degree(v));
  std::sort(seq.degrees.begin(), seq.degrees.end(), std::greater<>());
  return seq;
}

VertexSet reach(std::span<const VertexSet> adj, VertexSet alive, Vertex start) {
  VertexSet seen = bit(start) & alive;
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f != 0; f &= f - 1) next |= adj[lowest(f)];
    next &= alive & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

int count_components(std::span<const VertexSet> adj, VertexSet alive, int limit) {
  int count = 0;
  while (alive != 0) {
    alive &= ~reach(adj, alive, lowest(alive));
    if (++count > limit) break;
  }
  return count;
}

ComponentSplit components_after_removal(const Graph& g, VertexSet removed) {
  ComponentSplit split;
  VertexSet alive = g.vertices() & ~removed;
  while (alive != 0) {
    VertexSet block = reach(g.adjacency(), alive, lowest(alive));
    split.blocks.push_back(block);
    alive &= ~block;
  }
  split.count = static_cast<int>(split.blocks.size());
  return split;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return reach(g.adjacency(), g.vertices(), 0) == g.vertices();
}

bool is_biconnected(const Graph& g) {
  if (!is_connected(g)) return false;
  if (g.order() < 3) return true;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (count_components(g.adjacency(), g.vertices() & ~bit(v), 1) > 1) return false;
  }
  return true;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  dist[source] = 0;
  VertexSet seen = bit(source);
  VertexSet frontier = seen;
  for (int level = 1; frontier != 0; ++level) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f != 0; f &= f - 1) next |= g.neighbors(lowest(f));
    next &= ~seen;
    for (Vertex v : members(next)) dist[v] = level;
    seen |= next;
    frontier = next;
  }
  return dist;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph petersen_graph() {
  // Outer 5-cycle 0..4, spokes i--i+5, inner pentagram.
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

}  // namespace harris
