#ifndef PMC_GRAPH_HPP
#define PMC_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pmc/vertex_set.hpp"

namespace pmc {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1 with a vertex ordering.
///
/// The ordering maps rank r (0-based) to a vertex and fixes the prefix graphs
/// G_1 ⊂ G_2 ⊂ ... ⊂ G_n used by the incremental enumerators.
class Graph {
 public:
  Graph(std::size_t n, const std::vector<Edge>& edges) : n_(checked_order(n)), adjacency_(n, VertexSet(n)) {
    for (const auto& [u, v] : edges) {
      if (u >= n || v >= n) {
        throw std::invalid_argument("edge " + std::to_string(u + 1) + " " + std::to_string(v + 1) +
                                    " references a vertex outside [1," + std::to_string(n) + "]");
      }
      if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u + 1));
      if (adjacency_[u].contains(v)) {
        throw std::invalid_argument("duplicate edge " + std::to_string(u + 1) + " " +
                                    std::to_string(v + 1));
      }
      adjacency_[u].insert(v);
      adjacency_[v].insert(u);
      ++m_;
    }
    ordering_.resize(n);
    for (Vertex v = 0; v < n; ++v) ordering_[v] = v;
  }

  /// Same graph, vertices processed in `order` (order[r] is the vertex of rank r).
  Graph with_ordering(std::vector<Vertex> order) const {
    if (order.size() != n_) throw std::invalid_argument("ordering length differs from vertex count");
    VertexSet seen(n_);
    for (Vertex v : order) {
      if (v >= n_ || seen.contains(v)) throw std::invalid_argument("ordering is not a permutation");
      seen.insert(v);
    }
    Graph copy = *this;
    copy.ordering_ = std::move(order);
    return copy;
  }

  std::size_t order() const { return n_; }
  std::size_t edge_count() const { return m_; }
  const VertexSet& neighbors(Vertex v) const { return adjacency_.at(v); }
  bool adjacent(Vertex u, Vertex v) const { return adjacency_.at(u).contains(v); }
  const std::vector<Vertex>& ordering() const { return ordering_; }

  /// v_i for 1 <= i <= n.
  Vertex vertex_at(std::size_t level) const {
    if (level < 1 || level > n_) throw std::out_of_range("level " + std::to_string(level) + " out of range");
    return ordering_[level - 1];
  }

  VertexSet all_vertices() const { return VertexSet::full(n_); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : adjacency_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

 private:
  static std::size_t checked_order(std::size_t n) {
    if (n == 0) throw std::invalid_argument("graph must have at least one vertex");
    if (n > VertexSet::kMaxVertices) {
      throw std::invalid_argument("graph has " + std::to_string(n) + " vertices; at most " +
                                  std::to_string(VertexSet::kMaxVertices) + " are supported");
    }
    return n;
  }

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<VertexSet> adjacency_;
  std::vector<Vertex> ordering_;
};

/// Read-only induced subgraph of a Graph on a vertex subset.
///
/// The referenced Graph must outlive the view.
class GraphView {
 public:
  GraphView(const Graph& g, VertexSet vertices, std::size_t level = 0)
      : graph_(&g), vertices_(vertices), level_(level) {}

  const Graph& graph() const { return *graph_; }
  const VertexSet& vertices() const { return vertices_; }
  /// Prefix level i when the view is G_i, 0 for an arbitrary induced subgraph.
  std::size_t level() const { return level_; }
  std::size_t order() const { return vertices_.size(); }
  std::size_t capacity() const { return graph_->order(); }
  bool contains(Vertex v) const { return vertices_.contains(v); }

  VertexSet neighbors(Vertex v) const { return graph_->neighbors(v) & vertices_; }
  bool adjacent(Vertex u, Vertex v) const {
    return contains(u) && contains(v) && graph_->adjacent(u, v);
  }

  /// N(S): vertices of the view outside S with a neighbor in S.
  VertexSet neighborhood(const VertexSet& s) const {
    VertexSet out(capacity());
    for (Vertex v : s) out |= graph_->neighbors(v);
    out &= vertices_;
    out -= s;
    return out;
  }

  /// N[S] = S ∪ N(S), restricted to the view.
  VertexSet closed_neighborhood(const VertexSet& s) const {
    return neighborhood(s) | (s & vertices_);
  }

  /// Connected component of `start` in the subgraph induced by `allowed` (∩ view).
  VertexSet component_of(Vertex start, const VertexSet& allowed) const {
    const VertexSet pool = allowed & vertices_;
    VertexSet comp(capacity());
    if (!pool.contains(start)) return comp;
    comp.insert(start);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next(capacity());
      for (Vertex v : frontier) next |= graph_->neighbors(v);
      next &= pool;
      next -= comp;
      comp |= next;
      frontier = next;
    }
    return comp;
  }

  /// Components of the subgraph induced by `allowed` (∩ view), ordered by smallest vertex.
  std::vector<VertexSet> components(const VertexSet& allowed) const {
    std::vector<VertexSet> out;
    VertexSet rest = allowed & vertices_;
    while (!rest.empty()) {
      VertexSet comp = component_of(rest.first(), rest);
      rest -= comp;
      out.push_back(comp);
    }
    return out;
  }

 private:
  const Graph* graph_;
  VertexSet vertices_;
  std::size_t level_;
};

inline GraphView full_view(const Graph& g) { return {g, g.all_vertices(), g.order()}; }

/// G_i: the subgraph induced by the first i vertices of the ordering.
inline GraphView prefix(const Graph& g, std::size_t level) {
  if (level < 1 || level > g.order()) {
    throw std::out_of_range("prefix level " + std::to_string(level) + " outside [1," +
                            std::to_string(g.order()) + "]");
  }
  VertexSet vs(g.order());
  for (std::size_t r = 0; r < level; ++r) vs.insert(g.ordering()[r]);
  return {g, vs, level};
}

/// Components of G \ S with their full-for-S flags.
struct ComponentReport {
  std::vector<VertexSet> components;
  std::vector<bool> full_flags;
  VertexSet separator;
  std::size_t level = 0;

  std::vector<VertexSet> full_components() const {
    std::vector<VertexSet> out;
    for (std::size_t c = 0; c < components.size(); ++c)
      if (full_flags[c]) out.push_back(components[c]);
    return out;
  }
  std::size_t full_count() const {
    return static_cast<std::size_t>(std::count(full_flags.begin(), full_flags.end(), true));
  }
};

/// A component C is full for S when every vertex of S has a neighbor in C.
/// With S = ∅ every component is full.
inline ComponentReport components_of(const GraphView& g, const VertexSet& s) {
  if (!s.is_subset_of(g.vertices())) throw std::invalid_argument("separator is not a subset of the graph");
  ComponentReport report;
  report.separator = s;
  report.level = g.level();
  report.components = g.components(g.vertices() - s);
  report.full_flags.reserve(report.components.size());
  for (const auto& c : report.components) report.full_flags.push_back(g.neighborhood(c) == s);
  return report;
}

/// The full components of S, in ascending order of smallest vertex.
inline std::vector<VertexSet> full_components(const GraphView& g, const VertexSet& s) {
  std::vector<VertexSet> out;
  for (auto& c : g.components(g.vertices() - s))
    if (g.neighborhood(c) == s) out.push_back(c);
  return out;
}

}  // namespace pmc

#endif  // PMC_GRAPH_HPP
