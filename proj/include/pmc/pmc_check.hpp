#ifndef PMC_PMC_CHECK_HPP
#define PMC_PMC_CHECK_HPP

#include <stdexcept>
#include <string>

#include "pmc/graph.hpp"

namespace pmc {

/// Raised when an invariant the algorithms rely on is violated; always a bug.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

/// Potential-maximal-clique test for any K. Sets that are empty or not
/// contained in the view are never PMCs of it.
///
/// K is a PMC iff (a) no component of G \ K is full for K, and (b) every
/// non-adjacent pair x, y in K lies in N(C) for a common component C.
inline bool pmc_test(const GraphView& g, const VertexSet& k) {
  if (k.empty() || !k.is_subset_of(g.vertices())) return false;
  const auto comps = g.components(g.vertices() - k);
  std::vector<VertexSet> borders;
  borders.reserve(comps.size());
  for (const auto& c : comps) {
    VertexSet border = g.neighborhood(c);
    if (border == k) return false;
    borders.push_back(border);
  }
  for (Vertex x : k) {
    VertexSet need = k - g.neighbors(x);
    need.erase(x);
    if (need.empty()) continue;
    for (const auto& border : borders) {
      if (border.contains(x)) need -= border;
      if (need.empty()) break;
    }
    if (!need.empty()) return false;
  }
  return true;
}

}  // namespace detail

/// Whether K is a potential maximal clique of g. Runs in O(nm) set operations.
inline bool is_pmc(const GraphView& g, const VertexSet& k) {
  if (k.empty()) throw std::invalid_argument("is_pmc: empty vertex set");
  if (!k.is_subset_of(g.vertices())) throw std::invalid_argument("is_pmc: set is not contained in the graph");
  return detail::pmc_test(g, k);
}

/// S is a minimal separator iff G \ S has at least two full components.
/// Sets not contained in the view are rejected as non-separators.
inline bool is_minimal_separator(const GraphView& g, const VertexSet& s) {
  if (!s.is_subset_of(g.vertices())) return false;
  int full = 0;
  VertexSet rest = g.vertices() - s;
  while (!rest.empty()) {
    const VertexSet comp = g.component_of(rest.first(), rest);
    rest -= comp;
    if (g.neighborhood(comp) == s && ++full == 2) return true;
  }
  return false;
}

/// Given a PMC K of G_{i-1}, returns whichever of K and K ∪ {v} is a PMC of
/// g_next = G_i. Exactly one of them is; anything else throws InconsistencyError.
inline VertexSet extend_pmc(const GraphView& g_next, const VertexSet& k, Vertex v) {
  const VertexSet grown = k.with(v);
  const bool grown_ok = detail::pmc_test(g_next, grown);
  const bool same_ok = detail::pmc_test(g_next, k);
  if (grown_ok == same_ok) {
    throw InconsistencyError("extend_pmc: " + std::string(grown_ok ? "both " : "neither ") +
                             "K and K+v are PMCs for K = {" + to_label_string(k) + "}, v = " +
                             std::to_string(v + 1));
  }
  return grown_ok ? grown : k;
}

}  // namespace pmc

#endif  // PMC_PMC_CHECK_HPP
