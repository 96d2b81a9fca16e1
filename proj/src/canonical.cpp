// Individualization-refinement canonical labeling.
//
// Each search node holds an ordered partition of the vertices. Refinement splits
// cells by neighbor counts into other cells until the partition is equitable;
// the split order depends only on the counts, so refinement commutes with
// relabeling. Non-discrete partitions branch by individualizing each vertex of
// the first smallest non-singleton cell. Each discrete leaf fixes an ordering and
// therefore a relabeled adjacency matrix; the lexicographically largest matrix is
// the canonical graph.
//
// Two leaves with equal matrices yield an automorphism. Those prune the tree in
// two ways: a jump back to the common ancestor with the first or best leaf, and
// orbit pruning of sibling branches under the automorphisms fixing the current
// individualization sequence.

#include "harris/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "harris/graph6.hpp"

namespace harris {
namespace {

using Cells = std::vector<VertexSet>;
using Certificate = std::vector<VertexSet>;

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : adj_(g.adjacency()), n_(g.order()) {}

  CanonicalLabeling run(const Graph& g) {
    Cells root{g.vertices()};
    if (n_ > 0) search(std::move(root), 0);

    CanonicalLabeling out;
    out.labeling.assign(static_cast<std::size_t>(n_), 0);
    for (int p = 0; p < n_; ++p) out.labeling[best_order_[p]] = p;
    out.graph = g.relabeled(out.labeling);
    out.form.bytes = emit_graph6(out.graph);
    out.leaves = leaves_;
    out.automorphisms = generators_.size();
    return out;
  }

 private:
  void refine(Cells& cells) const {
    std::array<VertexSet, kMaxOrder + 1> buckets{};
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cells.size(); ++s) {
        const VertexSet splitter = cells[s];
        for (std::size_t c = 0; c < cells.size(); ++c) {
          const VertexSet cell = cells[c];
          if ((cell & (cell - 1)) == 0) continue;
          int lo = kMaxOrder + 1;
          int hi = -1;
          for (VertexSet r = cell; r != 0; r &= r - 1) {
            const Vertex v = lowest(r);
            const int k = popcount(adj_[v] & splitter);
            buckets[k] |= bit(v);
            lo = std::min(lo, k);
            hi = std::max(hi, k);
          }
          if (lo == hi) {
            buckets[lo] = 0;
            continue;
          }
          Cells fragments;
          for (int k = lo; k <= hi; ++k) {
            if (buckets[k] != 0) fragments.push_back(buckets[k]);
            buckets[k] = 0;
          }
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), fragments.begin(),
                       fragments.end());
          c += fragments.size() - 1;
          changed = true;
        }
      }
    }
  }

  Certificate certificate(const std::vector<Vertex>& order) const {
    std::vector<int> position(static_cast<std::size_t>(n_));
    for (int p = 0; p < n_; ++p) position[order[p]] = p;
    Certificate rows(static_cast<std::size_t>(n_), 0);
    for (int p = 0; p < n_; ++p) {
      for (VertexSet r = adj_[order[p]]; r != 0; r &= r - 1) rows[p] |= bit(position[lowest(r)]);
    }
    return rows;
  }

  static std::size_t common_prefix(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return i;
  }

  // Automorphism mapping each vertex of `order` to the vertex at the same position of `target`.
  void record_automorphism(const std::vector<Vertex>& order, const std::vector<Vertex>& target) {
    std::vector<Vertex> gamma(static_cast<std::size_t>(n_));
    for (int p = 0; p < n_; ++p) gamma[order[p]] = target[p];
    generators_.push_back(std::move(gamma));
  }

  // Returns the depth at which the search resumes.
  int leaf(const Cells& cells, int depth) {
    ++leaves_;
    std::vector<Vertex> order;
    order.reserve(cells.size());
    for (VertexSet c : cells) order.push_back(lowest(c));
    Certificate cert = certificate(order);

    if (first_order_.empty()) {
      first_order_ = order;
      first_cert_ = cert;
      first_path_ = path_;
      best_order_ = order;
      best_cert_ = std::move(cert);
      best_path_ = path_;
      return depth - 1;
    }
    if (cert == first_cert_) {
      record_automorphism(order, first_order_);
      return static_cast<int>(common_prefix(path_, first_path_));
    }
    if (cert == best_cert_) {
      record_automorphism(order, best_order_);
      return static_cast<int>(common_prefix(path_, best_path_));
    }
    if (cert > best_cert_) {
      best_order_ = std::move(order);
      best_cert_ = std::move(cert);
      best_path_ = path_;
    }
    return depth - 1;
  }

  static Vertex find(std::vector<Vertex>& parent, Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }

  // True when v lies in the orbit of an explored sibling under automorphisms
  // that fix the current individualization sequence pointwise.
  bool pruned_by_orbit(Vertex v, const std::vector<Vertex>& explored) const {
    std::vector<Vertex> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    bool any = false;
    for (const auto& gamma : generators_) {
      const bool fixes_path =
          std::all_of(path_.begin(), path_.end(), [&](Vertex p) { return gamma[p] == p; });
      if (!fixes_path) continue;
      any = true;
      for (Vertex u = 0; u < n_; ++u) {
        const Vertex a = find(parent, u);
        const Vertex b = find(parent, gamma[u]);
        if (a != b) parent[a] = b;
      }
    }
    if (!any) return false;
    const Vertex root = find(parent, v);
    return std::any_of(explored.begin(), explored.end(),
                       [&](Vertex e) { return find(parent, e) == root; });
  }

  int search(Cells cells, int depth) {
    refine(cells);
    if (static_cast<int>(cells.size()) == n_) return leaf(cells, depth);

    std::size_t target = cells.size();
    int target_size = kMaxOrder + 1;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const int size = popcount(cells[i]);
      if (size > 1 && size < target_size) {
        target = i;
        target_size = size;
      }
    }

    std::vector<Vertex> explored;
    for (VertexSet r = cells[target]; r != 0; r &= r - 1) {
      const Vertex v = lowest(r);
      if (!explored.empty() && pruned_by_orbit(v, explored)) continue;
      explored.push_back(v);

      Cells child = cells;
      child[target] &= ~bit(v);
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target), bit(v));
      path_.push_back(v);
      const int resume = search(std::move(child), depth + 1);
      path_.pop_back();
      if (resume < depth) return resume;
    }
    return depth - 1;
  }

  std::span<const VertexSet> adj_;
  int n_;
  std::vector<Vertex> path_;
  std::vector<Vertex> first_order_, best_order_;
  std::vector<Vertex> first_path_, best_path_;
  Certificate first_cert_, best_cert_;
  std::vector<std::vector<Vertex>> generators_;
  std::size_t leaves_ = 0;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder) {
    throw CeilingExceeded("canonical labeling supports at most " +
                          std::to_string(kCanonicalMaxOrder) + " vertices, got " +
                          std::to_string(g.order()));
  }
  return Canonizer(g).run(g);
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace harris
