#ifndef PMC_ORACLE_HPP
#define PMC_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pmc/graph.hpp"
#include "pmc/pmc_check.hpp"
#include "pmc/separators.hpp"

namespace pmc {

/// A chordal supergraph of `base` on the same vertices.
struct Triangulation {
  const Graph* base = nullptr;
  std::vector<VertexSet> adjacency;  // base edges plus fill
  std::vector<Edge> fill;            // sorted, u < v
  std::vector<Vertex> elimination;   // perfect elimination ordering of `adjacency`
  bool chordal = false;
};

namespace chordal {

/// Whether every vertex's neighbors later in `order` form a clique.
inline bool is_perfect_elimination(const std::vector<VertexSet>& adj, const std::vector<Vertex>& order) {
  const std::size_t n = adj.size();
  VertexSet later = VertexSet::full(n);
  for (Vertex v : order) {
    later.erase(v);
    const VertexSet up = adj[v] & later;
    for (Vertex u : up)
      if (!(up.without(u)).is_subset_of(adj[u])) return false;
  }
  return true;
}

/// Maximum cardinality search; the reverse of the visit order is a perfect
/// elimination ordering whenever the graph is chordal.
inline std::vector<Vertex> mcs_elimination_order(const std::vector<VertexSet>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> weight(n, 0);
  VertexSet unvisited = VertexSet::full(n);
  std::vector<Vertex> visit;
  visit.reserve(n);
  while (!unvisited.empty()) {
    Vertex best = unvisited.first();
    for (Vertex v : unvisited)
      if (weight[v] > weight[best]) best = v;
    unvisited.erase(best);
    visit.push_back(best);
    for (Vertex u : adj[best] & unvisited) ++weight[u];
  }
  std::reverse(visit.begin(), visit.end());
  return visit;
}

inline bool is_chordal(const std::vector<VertexSet>& adj) {
  return is_perfect_elimination(adj, mcs_elimination_order(adj));
}

/// Maximal cliques of a chordal graph from a perfect elimination ordering:
/// the sets {v} ∪ (later neighbors of v) that are not contained in another.
inline std::vector<VertexSet> maximal_cliques(const std::vector<VertexSet>& adj, const std::vector<Vertex>& peo) {
  const std::size_t n = adj.size();
  std::vector<VertexSet> candidates;
  VertexSet later = VertexSet::full(n);
  for (Vertex v : peo) {
    later.erase(v);
    candidates.push_back((adj[v] & later).with(v));
  }
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < candidates.size() && !dominated; ++j) {
      if (i == j) continue;
      const bool inside = candidates[i].is_subset_of(candidates[j]);
      dominated = inside && (candidates[i] != candidates[j] || j < i);
    }
    if (!dominated) out.push_back(candidates[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace chordal

/// Eliminates vertices in `order`, turning each vertex's not-yet-eliminated
/// neighbors into a clique. The result is chordal with `order` as certificate.
inline Triangulation elimination_game(const Graph& g, const std::vector<Vertex>& order) {
  const std::size_t n = g.order();
  if (order.size() != n) throw std::invalid_argument("elimination_game: ordering length differs from vertex count");
  {
    VertexSet seen(n);
    for (Vertex v : order) {
      if (v >= n || seen.contains(v)) throw std::invalid_argument("elimination_game: ordering is not a permutation");
      seen.insert(v);
    }
  }
  Triangulation t;
  t.base = &g;
  for (Vertex v = 0; v < n; ++v) t.adjacency.push_back(g.neighbors(v));
  VertexSet remaining = VertexSet::full(n);
  std::set<Edge> fill;
  for (Vertex v : order) {
    remaining.erase(v);
    const VertexSet up = t.adjacency[v] & remaining;
    for (Vertex a : up) {
      for (Vertex b : up) {
        if (a < b && !t.adjacency[a].contains(b)) {
          t.adjacency[a].insert(b);
          t.adjacency[b].insert(a);
          fill.emplace(a, b);
        }
      }
    }
  }
  t.fill.assign(fill.begin(), fill.end());
  t.elimination = order;
  t.chordal = chordal::is_perfect_elimination(t.adjacency, t.elimination);
  return t;
}

/// Removes fill edges one at a time (lexicographically smallest removable
/// edge first) while the graph stays chordal. The fixpoint has no removable
/// single fill edge, which for chordal completions means minimal.
inline Triangulation minimize_triangulation(Triangulation t) {
  if (!t.chordal) throw std::invalid_argument("minimize_triangulation: input is not chordal");
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t idx = 0; idx < t.fill.size(); ++idx) {
      const auto [a, b] = t.fill[idx];
      t.adjacency[a].erase(b);
      t.adjacency[b].erase(a);
      if (chordal::is_chordal(t.adjacency)) {
        t.fill.erase(t.fill.begin() + static_cast<std::ptrdiff_t>(idx));
        changed = true;
        break;
      }
      t.adjacency[a].insert(b);
      t.adjacency[b].insert(a);
    }
  }
  t.elimination = chordal::mcs_elimination_order(t.adjacency);
  t.chordal = chordal::is_perfect_elimination(t.adjacency, t.elimination);
  return t;
}

/// Whether removing any single fill edge breaks chordality.
inline bool is_single_edge_minimal(const Triangulation& t) {
  auto adj = t.adjacency;
  for (const auto& [a, b] : t.fill) {
    adj[a].erase(b);
    adj[b].erase(a);
    const bool still = chordal::is_chordal(adj);
    adj[a].insert(b);
    adj[b].insert(a);
    if (still) return false;
  }
  return true;
}

/// Minimality by the all-proper-subsets definition: no proper subset of the
/// fill yields a chordal graph. Exponential in the fill size.
inline bool is_minimal_all_subsets(const Triangulation& t) {
  const std::size_t f = t.fill.size();
  if (f > 20) throw BudgetExceeded("is_minimal_all_subsets: more than 20 fill edges");
  std::vector<VertexSet> base_adj;
  for (Vertex v = 0; v < t.base->order(); ++v) base_adj.push_back(t.base->neighbors(v));
  for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << f); ++mask) {
    auto adj = base_adj;
    for (std::size_t e = 0; e < f; ++e) {
      if (mask >> e & 1U) {
        adj[t.fill[e].first].insert(t.fill[e].second);
        adj[t.fill[e].second].insert(t.fill[e].first);
      }
    }
    if (chordal::is_chordal(adj)) return false;
  }
  return true;
}

inline std::vector<VertexSet> maximal_cliques(const Triangulation& t) {
  return chordal::maximal_cliques(t.adjacency, t.elimination);
}

struct TriangulationOracleOptions {
  std::size_t budget = 7;
  /// Also run every collected clique through is_pmc and throw on disagreement.
  bool cross_check = false;
};

/// PMCs as the maximal cliques of minimal triangulations, collected over the
/// minimized elimination games of all n! orderings.
inline std::set<VertexSet> pmc_oracle_triangulation(const Graph& g, TriangulationOracleOptions options = {}) {
  const std::size_t n = g.order();
  if (n > options.budget) {
    throw BudgetExceeded("pmc_oracle_triangulation: " + std::to_string(n) + " vertices exceeds budget " +
                         std::to_string(options.budget));
  }
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::set<VertexSet> out;
  do {
    const auto minimal = minimize_triangulation(elimination_game(g, order));
    for (const auto& clique : maximal_cliques(minimal)) out.insert(clique);
  } while (std::next_permutation(order.begin(), order.end()));
  if (options.cross_check) {
    const GraphView view = full_view(g);
    for (const auto& k : out) {
      if (!is_pmc(view, k)) {
        throw InconsistencyError("triangulation oracle: {" + to_label_string(k) + "} fails the PMC test");
      }
    }
  }
  return out;
}

/// PMCs by testing every nonempty vertex subset with is_pmc.
inline std::set<VertexSet> pmc_oracle_scan(const GraphView& g, std::size_t budget = 15) {
  const std::size_t n = g.order();
  if (n > budget) {
    throw BudgetExceeded("pmc_oracle_scan: " + std::to_string(n) + " vertices exceeds budget " +
                         std::to_string(budget));
  }
  const auto verts = g.vertices().to_vector();
  std::set<VertexSet> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    VertexSet k(g.capacity());
    for (std::size_t b = 0; b < n; ++b)
      if (mask >> b & 1U) k.insert(verts[b]);
    if (is_pmc(g, k)) out.insert(k);
  }
  return out;
}

inline std::set<VertexSet> pmc_oracle_scan(const Graph& g, std::size_t budget = 15) {
  return pmc_oracle_scan(full_view(g), budget);
}

}  // namespace pmc

#endif  // PMC_ORACLE_HPP
