#include "harris/properties.hpp"

#include <algorithm>
#include <random>

namespace harris {

EulerianVerdict is_eulerian(const Graph& g) {
  EulerianVerdict out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) % 2 != 0) {
      out.odd_vertex = v;
      return out;
    }
  }
  const VertexSet seen = reach(g.adjacency(), g.vertices(), 0);
  if (seen != g.vertices()) {
    out.disconnection = Edge{0, lowest(g.vertices() & ~seen)};
    return out;
  }
  out.eulerian = true;
  return out;
}

ToughnessVerdict is_tough(const Graph& g) {
  const int n = g.order();
  if (n > kToughnessMaxOrder) {
    throw CeilingExceeded("toughness search supports at most " +
                          std::to_string(kToughnessMaxOrder) + " vertices, got " +
                          std::to_string(n));
  }
  const auto adj = g.adjacency();
  const VertexSet all = g.vertices();
  ToughnessVerdict out;

  const int whole = count_components(adj, all);
  if (whole > 1) {
    out.tough = false;
    out.violating_set = VertexSet{0};
    out.components = whole;
    return out;
  }

  // components(G - S) <= n - |S|, so a violation needs |S| + 1 <= n - |S|.
  for (int k = 1; 2 * k + 1 <= n; ++k) {
    VertexSet s = first_n(k);
    while ((s & ~all) == 0) {
      const int c = count_components(adj, all & ~s, k);
      if (c > k) {
        out.tough = false;
        out.violating_set = s;
        out.components = count_components(adj, all & ~s);
        return out;
      }
      // Next k-subset in colexicographic order.
      const VertexSet low = s & (~s + 1);
      const VertexSet ripple = s + low;
      s = (((ripple ^ s) >> 2) / low) | ripple;
      if (ripple == 0) break;
    }
  }
  return out;
}

bool is_hamiltonian_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  const int n = g.order();
  if (n < 3 || static_cast<int>(cycle.size()) != n) return false;
  VertexSet seen = 0;
  for (Vertex v : cycle) {
    if (v < 0 || v >= n || (seen & bit(v))) return false;
    seen |= bit(v);
  }
  for (int i = 0; i < n; ++i) {
    if (!g.adjacent(cycle[i], cycle[(i + 1) % n])) return false;
  }
  return true;
}

namespace {

// Cheap certificates of non-Hamiltonicity.
bool obviously_not_hamiltonian(const Graph& g) {
  if (g.order() < 3) return true;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 2) return true;
  }
  return !is_biconnected(g);
}

std::optional<std::vector<Vertex>> subset_dp(const Graph& g) {
  // Paths start at vertex 0. reachable[mask] holds the endpoints v such that some
  // path from 0 visits exactly {0} + mask and ends at v. Vertex v >= 1 maps to bit v-1.
  const int m = g.order() - 1;
  std::vector<std::uint32_t> nb(static_cast<std::size_t>(m));
  for (int v = 1; v <= m; ++v) nb[v - 1] = static_cast<std::uint32_t>(g.neighbors(v) >> 1);
  const auto from_start = static_cast<std::uint32_t>(g.neighbors(0) >> 1);

  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  std::vector<std::uint32_t> reachable(std::size_t{full} + 1, 0);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t ends = 0;
    for (std::uint32_t r = mask; r != 0; r &= r - 1) {
      const int v = std::countr_zero(r);
      const std::uint32_t prev = mask ^ (std::uint32_t{1} << v);
      const bool ok = prev == 0 ? ((from_start >> v) & 1U) != 0 : (reachable[prev] & nb[v]) != 0;
      if (ok) ends |= std::uint32_t{1} << v;
    }
    reachable[mask] = ends;
  }

  std::uint32_t closing = reachable[full] & from_start;
  if (closing == 0) return std::nullopt;

  std::vector<Vertex> cycle;
  std::uint32_t mask = full;
  int v = std::countr_zero(closing);
  while (true) {
    cycle.push_back(v + 1);
    const std::uint32_t prev = mask ^ (std::uint32_t{1} << v);
    if (prev == 0) break;
    v = std::countr_zero(reachable[prev] & nb[v]);
    mask = prev;
  }
  cycle.push_back(0);
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

class Backtracker {
 public:
  explicit Backtracker(const Graph& g) : g_(g), n_(g.order()) {}

  std::optional<std::vector<Vertex>> run() {
    Vertex start = 0;
    for (Vertex v = 1; v < n_; ++v) {
      if (g_.degree(v) < g_.degree(start)) start = v;
    }
    start_ = start;
    path_.assign(1, start);
    if (extend(start, bit(start))) return path_;
    return std::nullopt;
  }

 private:
  bool extend(Vertex cur, VertexSet visited) {
    const VertexSet unvisited = g_.vertices() & ~visited;
    if (unvisited == 0) return g_.adjacent(cur, start_);

    const VertexSet ends = bit(cur) | bit(start_);
    VertexSet forced_by_cur = 0;
    int need_start = 0;
    for (VertexSet r = unvisited; r != 0; r &= r - 1) {
      const Vertex w = lowest(r);
      const VertexSet avail = g_.neighbors(w) & (unvisited | ends);
      const int k = popcount(avail);
      if (k < 2) return false;
      if (k == 2) {
        // Both remaining edges of w are forced.
        if (avail & bit(cur)) forced_by_cur |= bit(w);
        if (cur != start_ && (avail & bit(start_))) ++need_start;
      }
    }
    if (popcount(forced_by_cur) > (cur == start_ ? 2 : 1)) return false;
    if (need_start > 1) return false;
    if ((reach(g_.adjacency(), unvisited | bit(cur), cur) & unvisited) != unvisited) return false;

    VertexSet options = g_.neighbors(cur) & unvisited;
    if (forced_by_cur != 0 && cur != start_) options &= forced_by_cur;

    // Fewest onward options first.
    std::vector<std::pair<int, Vertex>> order;
    for (VertexSet r = options; r != 0; r &= r - 1) {
      const Vertex w = lowest(r);
      order.emplace_back(popcount(g_.neighbors(w) & unvisited), w);
    }
    std::sort(order.begin(), order.end());
    for (auto [_, w] : order) {
      path_.push_back(w);
      if (extend(w, visited | bit(w))) return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  int n_;
  Vertex start_ = 0;
  std::vector<Vertex> path_;
};

}  // namespace

std::optional<std::vector<Vertex>> heuristic_hamiltonian_cycle(const Graph& g, int attempts) {
  const int n = g.order();
  if (obviously_not_hamiltonian(g)) return std::nullopt;
  if (attempts <= 0) attempts = 4;
  const int budget = 2 * n * n + 16;

  std::mt19937 rng(static_cast<std::uint32_t>(n * 7919 + g.edge_count()));
  std::vector<Vertex> path;
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int attempt = 0; attempt < attempts; ++attempt) {
    path.assign(1, static_cast<Vertex>((attempt * 5) % n));
    VertexSet in_path = bit(path[0]);
    pos[path[0]] = 0;
    for (int step = 0; step < budget; ++step) {
      const Vertex end = path.back();
      const VertexSet ext = g.neighbors(end) & ~in_path;
      if (ext != 0) {
        // Extend toward the neighbor with the fewest free neighbors.
        Vertex pick = -1;
        int best = kMaxOrder + 1;
        for (VertexSet r = ext; r != 0; r &= r - 1) {
          const Vertex w = lowest(r);
          const int free = popcount(g.neighbors(w) & ~in_path);
          if (free < best || (free == best && (rng() & 1U))) {
            best = free;
            pick = w;
          }
        }
        pos[pick] = static_cast<int>(path.size());
        path.push_back(pick);
        in_path |= bit(pick);
        continue;
      }
      if (static_cast<int>(path.size()) == n && g.adjacent(end, path.front())) return path;

      // Rotate: pick u adjacent to the end, reverse the segment after u.
      const VertexSet pivots =
          g.neighbors(end) & in_path & ~bit(path.size() >= 2 ? path[path.size() - 2] : end);
      if (pivots == 0) break;
      const auto choices = members(pivots);
      const Vertex u = choices[rng() % choices.size()];
      std::reverse(path.begin() + pos[u] + 1, path.end());
      for (std::size_t i = static_cast<std::size_t>(pos[u]) + 1; i < path.size(); ++i) {
        pos[path[i]] = static_cast<int>(i);
      }
    }
  }
  return std::nullopt;
}

HamiltonicityVerdict exhaustive_hamiltonian_cycle(const Graph& g) {
  HamiltonicityVerdict out;
  if (obviously_not_hamiltonian(g)) return out;
  std::optional<std::vector<Vertex>> cycle;
  if (g.order() <= kHamiltonDpMaxOrder) {
    cycle = subset_dp(g);
  } else if (g.order() <= kHamiltonMaxOrder) {
    cycle = Backtracker(g).run();
  } else {
    throw CeilingExceeded("Hamiltonicity search supports at most " +
                          std::to_string(kHamiltonMaxOrder) + " vertices, got " +
                          std::to_string(g.order()));
  }
  out.hamiltonian = cycle.has_value();
  out.cycle = std::move(cycle);
  return out;
}

HamiltonicityVerdict find_hamiltonian_cycle(const Graph& g) {
  if (auto cycle = heuristic_hamiltonian_cycle(g)) return {true, std::move(cycle)};
  return exhaustive_hamiltonian_cycle(g);
}

HarrisVerdict is_harris(const Graph& g, bool full_report) {
  HarrisVerdict out;
  out.eulerian = is_eulerian(g);
  if (!full_report && !out.eulerian.eulerian) return out;
  out.toughness = is_tough(g);
  if (!full_report && !out.toughness->tough) return out;
  out.hamiltonicity = find_hamiltonian_cycle(g);
  out.is_harris = g.order() >= kHarrisMinOrder && out.eulerian.eulerian && out.toughness->tough &&
                  !out.hamiltonicity->hamiltonian;
  return out;
}

std::optional<int> sigma2(const Graph& g) {
  std::optional<int> best;
  for (Vertex u = 0; u < g.order(); ++u) {
    const VertexSet later = g.vertices() & ~first_n(u + 1) & ~g.neighbors(u);
    for (VertexSet r = later; r != 0; r &= r - 1) {
      const int sum = g.degree(u) + g.degree(lowest(r));
      if (!best || sum < *best) best = sum;
    }
  }
  return best;
}

JungResult jung_shortcut(const Graph& g, std::optional<bool> known_tough) {
  const int n = g.order();
  if (n < 11) return JungResult::Unknown;
  // A complete graph has no independent pair; the minimum over an empty set is unbounded.
  if (auto s = sigma2(g); s && *s < n - 4) return JungResult::Unknown;
  const bool tough = known_tough ? *known_tough : is_tough(g).tough;
  return tough ? JungResult::HamiltonianByLemma : JungResult::Unknown;
}

}  // namespace harris
