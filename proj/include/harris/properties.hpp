#pragma once

#include <optional>
#include <vector>

#include "harris/graph.hpp"

namespace harris {

/// Subset-DP Hamiltonicity is used up to this order; pruned backtracking above it.
inline constexpr int kHamiltonDpMaxOrder = 24;
inline constexpr int kHamiltonMaxOrder = 40;
/// Exhaustive toughness search ceiling (2^(n-1) subsets in the worst case).
inline constexpr int kToughnessMaxOrder = 32;
/// Harris status needs at least this many vertices; smaller verdicts are degenerate.
inline constexpr int kHarrisMinOrder = 3;

struct EulerianVerdict {
  bool eulerian = false;
  std::optional<Vertex> odd_vertex;
  /// Two vertices in different components.
  std::optional<Edge> disconnection;
};

EulerianVerdict is_eulerian(const Graph& g);

struct ToughnessVerdict {
  bool tough = true;
  /// Present exactly when tough is false; components(G - S) > |S|.
  std::optional<VertexSet> violating_set;
  int components = 0;  // component count of G - violating_set
};

/// Searches disconnecting sets in increasing size up to floor((n-1)/2). The empty set
/// violates only when g is disconnected.
ToughnessVerdict is_tough(const Graph& g);

struct HamiltonicityVerdict {
  bool hamiltonian = false;
  std::optional<std::vector<Vertex>> cycle;
};

/// Rotation-extension hunt with a step budget. A returned cycle is always valid;
/// nullopt proves nothing.
std::optional<std::vector<Vertex>> heuristic_hamiltonian_cycle(const Graph& g, int attempts = 0);

/// Definitive search without the heuristic front end.
HamiltonicityVerdict exhaustive_hamiltonian_cycle(const Graph& g);

/// Heuristic first, then the definitive search.
HamiltonicityVerdict find_hamiltonian_cycle(const Graph& g);

bool is_hamiltonian_cycle(const Graph& g, const std::vector<Vertex>& cycle);

struct HarrisVerdict {
  EulerianVerdict eulerian;
  std::optional<ToughnessVerdict> toughness;          // absent only when short-circuited
  std::optional<HamiltonicityVerdict> hamiltonicity;  // absent only when short-circuited
  bool is_harris = false;
};

/// With full_report = false, stops at the first failing check (Eulerian, then
/// toughness, then Hamiltonicity).
HarrisVerdict is_harris(const Graph& g, bool full_report = true);

/// Minimum deg(u) + deg(v) over non-adjacent pairs; nullopt when no such pair exists.
std::optional<int> sigma2(const Graph& g);

enum class JungResult { HamiltonianByLemma, Unknown };

/// A tough graph on n >= 11 vertices with sigma2 >= n - 4 is Hamiltonian. Never
/// claims non-Hamiltonicity. `known_tough` skips the toughness search when given.
JungResult jung_shortcut(const Graph& g, std::optional<bool> known_tough = std::nullopt);

}  // namespace harris
