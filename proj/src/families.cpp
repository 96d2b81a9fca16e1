#include "harris/families.hpp"

namespace harris {

namespace {

std::string indexed(const char* stem, int i) { return stem + std::to_string(i); }

void check_roles(const LabeledFamilyState& s, const std::string& family) {
  if (s.family != family) {
    throw GraphError("expected a " + family + " state, got '" + s.family + "'");
  }
  VertexSet seen = 0;
  for (const auto& [name, v] : s.roles) {
    if (v < 0 || v >= s.graph.order()) throw GraphError("role " + name + " is not a live vertex");
    if (seen & bit(v)) throw GraphError("role " + name + " shares a vertex with another role");
    seen |= bit(v);
  }
}

// k of the newest chain vertex v_k; the schema is A, B, C, v1..vk with k = 4 + 2*step.
int hirotaka_chain_length(const LabeledFamilyState& s) {
  check_roles(s, "hirotaka");
  const int k = 4 + 2 * s.step;
  if (static_cast<int>(s.roles.size()) != k + 3 || s.graph.order() != k + 3) {
    throw GraphError("hirotaka state does not match its step count");
  }
  for (const char* r : {"A", "B", "C"}) s.role(r);
  for (int i = 1; i <= k; ++i) s.role(indexed("v", i));
  if (s.graph.adjacent(s.role("A"), s.role(indexed("v", k)))) {
    throw GraphError("hirotaka state already has edge {A, v" + std::to_string(k) + "}");
  }
  return k;
}

// Index of the outer pair d_k, e_k; the schema grows by one index per step.
int shaw_outer_index(const LabeledFamilyState& s) {
  check_roles(s, "shaw");
  const int k = 2 + s.step;
  if (s.graph.order() != 9 + 4 * s.step) throw GraphError("shaw state does not match its step count");
  for (const char* r : {"a", "b1", "c1", "t1", "b2", "d1", "e1", "d2", "e2"}) s.role(r);
  for (int i = 3; i <= k; ++i) {
    for (const char* stem : {"b", "c", "d", "e"}) s.role(indexed(stem, i));
  }
  if (static_cast<int>(s.roles.size()) != 9 + 4 * s.step) {
    throw GraphError("shaw state has unexpected roles");
  }
  if (!s.graph.adjacent(s.role(indexed("d", k)), s.role(indexed("e", k)))) {
    throw GraphError("shaw outer pair is not adjacent");
  }
  return k;
}

}  // namespace

Vertex LabeledFamilyState::role(const std::string& name) const {
  auto it = roles.find(name);
  if (it == roles.end()) throw GraphError("missing role " + name + " in " + family + " state");
  return it->second;
}

LabeledFamilyState hirotaka_base() {
  enum : Vertex { A, B, C, v1, v2, v3, v4 };
  LabeledFamilyState s;
  s.family = "hirotaka";
  s.graph = Graph::from_edges(7, {{C, A}, {C, B}, {C, v1}, {C, v2}, {C, v3}, {C, v4},
                                  {A, B}, {A, v2}, {A, v3},
                                  {v1, v2}, {v2, v3}, {v3, v4}});
  s.roles = {{"A", A}, {"B", B}, {"C", C}, {"v1", v1}, {"v2", v2}, {"v3", v3}, {"v4", v4}};
  return s;
}

LabeledFamilyState hirotaka_step(const LabeledFamilyState& state) {
  const int k = hirotaka_chain_length(state);
  LabeledFamilyState next = state;
  const Vertex a = state.role("A");
  const Vertex c = state.role("C");
  const Vertex vk = state.role(indexed("v", k));
  const Vertex v1 = next.graph.add_vertex();
  const Vertex v2 = next.graph.add_vertex();
  for (auto [u, v] : {Edge{vk, v1}, Edge{v1, v2}, Edge{a, vk}, Edge{a, v1}, Edge{c, v1}, Edge{c, v2}}) {
    next.graph.add_edge(u, v);
  }
  next.roles[indexed("v", k + 1)] = v1;
  next.roles[indexed("v", k + 2)] = v2;
  ++next.step;
  return next;
}

LabeledFamilyState shaw_base() {
  enum : Vertex { a, b1, c1, t1, b2, d1, e1, d2, e2 };
  LabeledFamilyState s;
  s.family = "shaw";
  s.graph = Graph::from_edges(9, {{a, b1}, {b1, d1}, {a, c1}, {c1, t1}, {t1, e1}, {a, b2}, {b2, d2},
                                  {a, e2},
                                  {d1, e1}, {d1, d2}, {d1, e2}, {e1, d2}, {e1, e2}, {d2, e2}});
  s.roles = {{"a", a},   {"b1", b1}, {"c1", c1}, {"t1", t1}, {"b2", b2},
             {"d1", d1}, {"e1", e1}, {"d2", d2}, {"e2", e2}};
  return s;
}

LabeledFamilyState shaw_step(const LabeledFamilyState& state) {
  const int k = shaw_outer_index(state);
  LabeledFamilyState next = state;
  Graph& g = next.graph;
  const Vertex a = state.role("a");
  const Vertex dk = state.role(indexed("d", k));
  const Vertex ek = state.role(indexed("e", k));
  const Vertex b = g.add_vertex();
  const Vertex c = g.add_vertex();
  const Vertex d = g.add_vertex();
  const Vertex e = g.add_vertex();
  for (auto [u, v] : {Edge{a, b}, Edge{a, c}, Edge{b, d}, Edge{c, e}, Edge{dk, e}, Edge{ek, d},
                      Edge{dk, d}, Edge{ek, e}, Edge{d, e}}) {
    g.add_edge(u, v);
  }
  next.roles[indexed("b", k + 1)] = b;
  next.roles[indexed("c", k + 1)] = c;
  next.roles[indexed("d", k + 1)] = d;
  next.roles[indexed("e", k + 1)] = e;
  ++next.step;
  return next;
}

LabeledFamilyState justine_labeled(int n) {
  if (n < 3 || n % 2 == 0) {
    throw GraphError("justine needs an odd cycle length >= 3, got " + std::to_string(n));
  }
  if (3 * n > kMaxOrder) throw CeilingExceeded("justine order exceeds 64 vertices");
  LabeledFamilyState s;
  s.family = "justine";
  s.graph = Graph(3 * n);
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    s.graph.add_edge(i, j);
    s.graph.add_edge(n + i, n + j);
    s.graph.add_edge(i, n + i);
    s.graph.add_edge(i, 2 * n + i);
    s.graph.add_edge(2 * n + i, n + i);
    s.roles[indexed("a", i + 1)] = i;
    s.roles[indexed("b", i + 1)] = n + i;
    s.roles[indexed("m", i + 1)] = 2 * n + i;
  }
  s.step = (n - 3) / 2;
  return s;
}

Graph justine(int n) { return justine_labeled(n).graph; }

std::vector<LabeledFamilyState> hirotaka_family(int steps) {
  if (steps < 0) throw GraphError("step count must be non-negative");
  std::vector<LabeledFamilyState> out{hirotaka_base()};
  for (int i = 0; i < steps; ++i) out.push_back(hirotaka_step(out.back()));
  return out;
}

std::vector<LabeledFamilyState> shaw_family(int steps) {
  if (steps < 0) throw GraphError("step count must be non-negative");
  std::vector<LabeledFamilyState> out{shaw_base()};
  for (int i = 0; i < steps; ++i) out.push_back(shaw_step(out.back()));
  return out;
}

}  // namespace harris
