#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace harris {

using Vertex = int;
/// Vertex subset as a bitmask: bit v set means vertex v is a member.
using VertexSet = std::uint64_t;

inline constexpr int kMaxOrder = 64;

/// Raised for malformed input: bad edges, stale barnacles, missing edges.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a request exceeds a documented size ceiling. Never a wrong answer.
class CeilingExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

constexpr VertexSet bit(Vertex v) { return VertexSet{1} << v; }

constexpr VertexSet first_n(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline int popcount(VertexSet s) { return std::popcount(s); }

inline Vertex lowest(VertexSet s) { return std::countr_zero(s); }

/// Members of a vertex set in increasing order.
std::vector<Vertex> members(VertexSet s);

VertexSet to_set(std::span<const Vertex> vs);

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Validates every pair; duplicate edges collapse to one.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);
  /// Rows must be symmetric, loop-free and confined to the first rows.size() bits.
  static Graph from_adjacency(std::span<const VertexSet> rows);

  int order() const { return n_; }
  std::size_t edge_count() const;
  VertexSet vertices() const { return first_n(n_); }

  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }
  int degree(Vertex v) const { return popcount(adj_[v]); }
  std::span<const VertexSet> adjacency() const { return adj_; }

  /// Sorted, each edge once with u < v.
  std::vector<Edge> edges() const;

  // Mutators used by the construction routines; a Graph is a plain value.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  Vertex add_vertex();

  /// Graph induced on the given vertices, relabeled in increasing order.
  Graph induced(VertexSet keep) const;

  /// Relabels so that old vertex v becomes perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  /// Vertices of `other` are shifted by order().
  Graph disjoint_union(const Graph& other) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_pair(Vertex u, Vertex v) const;

  int n_ = 0;
  std::vector<VertexSet> adj_;
};

/// Degrees in non-increasing order.
struct DegreeSequence {
  std::vector<int> degrees;

  /// Dash-joined form, e.g. "6-4-4-4-2-2-2".
  std::string str() const;
  static DegreeSequence parse(const std::string& text);

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
  friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;
};

DegreeSequence degree_sequence(const Graph& g);

struct ComponentSplit {
  int count = 0;
  std::vector<VertexSet> blocks;  // ordered by smallest member
};

/// Connected components of g - removed.
ComponentSplit components_after_removal(const Graph& g, VertexSet removed);

/// Component count of g restricted to `alive`, stopping once `limit` is exceeded.
int count_components(std::span<const VertexSet> adj, VertexSet alive, int limit = kMaxOrder + 1);

/// Vertices reachable from `start` inside `alive`.
VertexSet reach(std::span<const VertexSet> adj, VertexSet alive, Vertex start);

bool is_connected(const Graph& g);

/// Connected with no cut vertex. Graphs on fewer than 3 vertices count as connected-only.
bool is_biconnected(const Graph& g);

/// Breadth-first distances from `source`; -1 when unreachable.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

// Named small graphs used throughout tests and examples.
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph petersen_graph();

}  // namespace harris
