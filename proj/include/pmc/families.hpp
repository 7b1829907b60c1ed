#ifndef PMC_FAMILIES_HPP
#define PMC_FAMILIES_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pmc/graph.hpp"

namespace pmc::families {

/// Uniform double in [0,1) from the top 53 bits; identical on every platform.
inline double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Fisher-Yates with an explicit index draw, so a seed gives the same
/// permutation everywhere (std::shuffle leaves the algorithm unspecified).
inline std::vector<Vertex> random_ordering(std::size_t n, std::uint64_t seed) {
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(order[i - 1], order[j]);
  }
  return order;
}

/// Hubs 1 and 2 joined by k internally disjoint paths 1 - (2j+1) - (2j+2) - 2.
inline Graph theta(std::size_t k) {
  if (k < 1) throw std::invalid_argument("theta: k must be at least 1");
  std::vector<Edge> edges;
  for (std::size_t j = 1; j <= k; ++j) {
    const Vertex near = 2 * j, far = 2 * j + 1;  // labels 2j+1, 2j+2
    edges.emplace_back(0, near);
    edges.emplace_back(near, far);
    edges.emplace_back(far, 1);
  }
  return Graph(2 * k + 2, edges);
}

inline Graph path(std::size_t n) {
  if (n < 1) throw std::invalid_argument("path: n must be at least 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be at least 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

inline Graph complete(std::size_t n) {
  if (n < 1) throw std::invalid_argument("complete: n must be at least 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

/// G(n, p): each pair independently with probability p.
inline Graph random(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random: n must be at least 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("random: p must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (unit(rng) < p) edges.emplace_back(u, v);
  return Graph(n, edges);
}

/// The labeled graph on n vertices whose edge set is given by the bits of
/// `code` over the pairs (u, v), u < v, in lexicographic order.
inline Graph from_code(std::size_t n, std::uint64_t code) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if (code >> bit & 1U) edges.emplace_back(u, v);
  return Graph(n, edges);
}

struct CorpusGraph {
  std::string id;
  Graph graph;
};

/// Seeded random corpus cycling n over [n_min, n_max] and p over {0.2, 0.4, 0.6}.
inline std::vector<CorpusGraph> random_corpus(std::size_t count, std::uint64_t seed, std::size_t n_min = 6,
                                              std::size_t n_max = 9) {
  if (n_min < 1 || n_max < n_min) throw std::invalid_argument("random_corpus: invalid vertex range");
  static constexpr double kDensities[] = {0.2, 0.4, 0.6};
  const std::size_t span = n_max - n_min + 1;
  std::vector<CorpusGraph> out;
  out.reserve(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    const std::size_t n = n_min + idx % span;
    const double p = kDensities[(idx / span) % 3];
    const std::uint64_t graph_seed = seed * 1000003ULL + idx;
    out.push_back({"random-" + std::to_string(n) + "-" + std::to_string(p).substr(0, 3) + "-" +
                       std::to_string(graph_seed),
                   random(n, p, graph_seed)});
  }
  return out;
}

struct FamilyParams {
  std::size_t size = 0;  // k for theta, n otherwise
  double p = 0.4;
  std::uint64_t seed = 7;
};

inline Graph make(std::string_view name, const FamilyParams& params) {
  if (name == "theta") return theta(params.size);
  if (name == "path") return path(params.size);
  if (name == "cycle") return cycle(params.size);
  if (name == "complete") return complete(params.size);
  if (name == "random") return random(params.size, params.p, params.seed);
  throw std::invalid_argument("unknown family '" + std::string(name) +
                              "' (expected theta, path, cycle, complete or random)");
}

/// Identifier used in benchmark output, e.g. "theta-4" or "random-8-0.4-7".
inline std::string id(std::string_view name, const FamilyParams& params) {
  std::string out = std::string(name) + "-" + std::to_string(params.size);
  if (name == "random") {
    std::string p = std::to_string(params.p);
    p.erase(p.find_last_not_of('0') + 1);
    if (!p.empty() && p.back() == '.') p.pop_back();
    out += "-" + p + "-" + std::to_string(params.seed);
  }
  return out;
}

}  // namespace pmc::families

#endif  // PMC_FAMILIES_HPP
