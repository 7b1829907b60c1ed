#ifndef PMC_ENUMERATORS_HPP
#define PMC_ENUMERATORS_HPP

#include <chrono>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "pmc/generator.hpp"
#include "pmc/graph.hpp"
#include "pmc/metrics.hpp"
#include "pmc/pmc_check.hpp"
#include "pmc/separators.hpp"

namespace pmc {

enum class Algorithm { kBt, kNondup, kDfs };

inline std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kBt: return "bt";
    case Algorithm::kNondup: return "nondup";
    case Algorithm::kDfs: return "dfs";
  }
  return "?";
}

inline Algorithm parse_algorithm(std::string_view name) {
  if (name == "bt") return Algorithm::kBt;
  if (name == "nondup") return Algorithm::kNondup;
  if (name == "dfs") return Algorithm::kDfs;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "' (expected bt, nondup or dfs)");
}

/// The five duplicate-avoidance checks of the duplicate-free generation step.
/// Every check is on by default; switching one off is only useful for
/// demonstrating that it is needed.
struct Gates {
  bool not_yet_seen = true;           // (i)   first (S, T, C) producing D
  bool separator_not_prev_pmc = true;  // (ii)  S is not a PMC of G_{i-1}
  bool candidate_not_prev_pmc = true;  // (iii) D is not a PMC of G_{i-1}
  bool not_only_new_vertex = true;     // (iv)  T ∩ C != {v_i}
  bool reduced_candidate_fresh = true; // (v)   D - v_i neither a PMC of G_{i-1} nor a separator of G_i

  static Gates all_but(std::string_view roman) {
    Gates g;
    if (roman == "i") g.not_yet_seen = false;
    else if (roman == "ii") g.separator_not_prev_pmc = false;
    else if (roman == "iii") g.candidate_not_prev_pmc = false;
    else if (roman == "iv") g.not_only_new_vertex = false;
    else if (roman == "v") g.reduced_candidate_fresh = false;
    else throw std::invalid_argument("unknown gate '" + std::string(roman) + "' (expected i..v)");
    return g;
  }
};

/// Where a depth-first output came from: the level whose generation step
/// produced it and the set produced there, before extension.
struct Origin {
  std::size_t level = 0;
  VertexSet generated;
};

namespace detail {

/// Prefix graphs G_i and G_{i-1}, v_i, and the PMC test with call counting.
struct Level {
  Level(const Graph& g, std::size_t i, Metrics* m)
      : index(i), cur(prefix(g, i)), prev(i > 1 ? prefix(g, i - 1) : GraphView(g, VertexSet(g.order()), 0)),
        added(g.vertex_at(i)), metrics(m) {}

  bool pmc(const GraphView& view, const VertexSet& k) const {
    if (metrics) ++metrics->is_pmc_calls;
    return pmc_test(view, k);
  }

  std::size_t index;
  GraphView cur;
  GraphView prev;
  Vertex added;
  Metrics* metrics;
};

/// Minimal separators of G_i from fresh polynomial-space streams.
struct StreamedSeparators {
  GraphView view;
  Metrics* metrics;
  SeparatorStream open() const { return SeparatorStream(view, metrics); }
  SeparatorStream open_disjoint_from_one_of(std::vector<VertexSet> sets) const {
    return SeparatorStream(view, metrics, std::move(sets));
  }
};

/// Minimal separators of G_i from a list materialized once per level.
struct StoredSeparators {
  struct Cursor {
    const std::vector<VertexSet>* list;
    std::size_t pos = 0;
    std::optional<VertexSet> next() {
      if (pos == list->size()) return std::nullopt;
      return (*list)[pos++];
    }
  };
  const std::vector<VertexSet>* list;
  Cursor open() const { return {list}; }
  Cursor open_disjoint_from_one_of(const std::vector<VertexSet>&) const { return {list}; }
};

/// Whether (s, t, c) is the first triple of the generation loops that
/// produces d. The loops are rerun from the start without memory of earlier
/// triples. A triple can only produce d when S ⊆ d, d - S ⊆ C and T ∩ C = d - S,
/// so the reruns walk restricted separator streams that keep loop order and
/// skip the other triples; which triple comes first is unchanged.
template <typename Source>
bool first_producer(const Source& source, const Level& lv, const VertexSet& d, const VertexSet& s,
                    const VertexSet& t, const VertexSet& c) {
  auto s_loop = source.open_disjoint_from_one_of({lv.cur.vertices() - d});
  while (auto s2 = s_loop.next()) {
    if (!s2->is_subset_of(d) || s2->contains(lv.added) || is_minimal_separator(lv.prev, *s2)) continue;
    const VertexSet inside = d - *s2;
    std::vector<VertexSet> comps;
    for (auto& comp : full_components(lv.cur, *s2))
      if (inside.is_subset_of(comp)) comps.push_back(comp);
    if (comps.empty()) continue;
    std::vector<VertexSet> outside;
    for (const auto& c2 : comps) outside.push_back(c2 - inside);
    auto t_loop = source.open_disjoint_from_one_of(std::move(outside));
    while (auto t2 = t_loop.next()) {
      for (const auto& c2 : comps) {
        if ((*s2 | (*t2 & c2)) == d) return *s2 == s && *t2 == t && c2 == c;
      }
    }
  }
  throw InconsistencyError("first_producer: the triple producing {" + to_label_string(d) +
                           "} was not met when rerunning the loops");
}

/// New PMCs of G_i: those not obtained by extending a PMC of G_{i-1}.
///
/// `guard_first` evaluates the check on S before IsPMC(S ∪ {v_i}, G_i) in the
/// S ∪ {v_i} branch (the depth-first formulation) instead of after it.
template <typename Source>
Generator<VertexSet> generate_new(Source source, Level lv, Gates gates, bool guard_first) {
  if (lv.index == 1) {
    co_yield VertexSet(lv.cur.capacity(), {lv.added});
    co_return;
  }
  RetainedSets locals(lv.metrics, 0);
  auto s_loop = source.open();
  while (auto s = s_loop.next()) {
    locals.resize(2);
    const VertexSet with_new = s->with(lv.added);
    const bool fresh = guard_first
                           ? (!gates.separator_not_prev_pmc || !lv.pmc(lv.prev, *s)) && lv.pmc(lv.cur, with_new)
                           : lv.pmc(lv.cur, with_new) && (!gates.separator_not_prev_pmc || !lv.pmc(lv.prev, *s));
    if (fresh) co_yield with_new;

    if (s->contains(lv.added) || is_minimal_separator(lv.prev, *s)) continue;
    const auto comps = full_components(lv.cur, *s);
    locals.resize(4 + comps.size());
    auto t_loop = source.open();
    while (auto t = t_loop.next()) {
      for (const auto& c : comps) {
        const VertexSet inside = *t & c;
        const VertexSet d = *s | inside;
        if (!lv.pmc(lv.cur, d)) continue;
        if (gates.not_yet_seen && !first_producer(source, lv, d, *s, *t, c)) continue;
        if (gates.candidate_not_prev_pmc && lv.pmc(lv.prev, d)) continue;
        if (gates.not_only_new_vertex && inside == VertexSet(inside.capacity(), {lv.added})) continue;
        if (inside.contains(lv.added) && gates.reduced_candidate_fresh) {
          const VertexSet reduced = d.without(lv.added);
          if (lv.pmc(lv.prev, reduced) || is_minimal_separator(lv.cur, reduced)) continue;
        }
        co_yield d;
      }
    }
  }
}

inline std::vector<VertexSet> materialize_separators(const GraphView& g, Metrics* metrics) {
  std::vector<VertexSet> out;
  SeparatorStream stream(g, metrics);
  while (auto s = stream.next()) out.push_back(*s);
  return out;
}

struct StoredPmcs {
  std::vector<VertexSet> sets;
  std::size_t pos = 0;
};

class Stopwatch {
 public:
  explicit Stopwatch(Metrics* m) : metrics_(m), start_(std::chrono::steady_clock::now()) {}
  Stopwatch(const Stopwatch&) = delete;
  Stopwatch& operator=(const Stopwatch&) = delete;
  ~Stopwatch() {
    if (metrics_) metrics_->wall_time += std::chrono::steady_clock::now() - start_;
  }

 private:
  Metrics* metrics_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

using PmcSet = std::set<VertexSet>;

/// Incremental enumeration that stores the PMC families Π_{i-1} and Π_i and
/// deduplicates through them. Space grows with the number of PMCs; kept as
/// the reference point for the other two algorithms.
inline PmcSet enumerate_bt(const Graph& g, Metrics* metrics = nullptr) {
  detail::Stopwatch clock(metrics);
  std::unordered_set<VertexSet> previous{VertexSet(g.order(), {g.vertex_at(1)})};
  RetainedSets held(metrics, previous.size());
  for (std::size_t i = 2; i <= g.order(); ++i) {
    const detail::Level lv(g, i, metrics);
    std::unordered_set<VertexSet> current;
    auto add = [&](const VertexSet& k) {
      if (!current.insert(k).second && metrics) ++metrics->duplicates_detected;
    };
    for (const auto& pi : previous) {
      if (lv.pmc(lv.cur, pi.with(lv.added))) add(pi.with(lv.added));
      if (lv.pmc(lv.cur, pi)) add(pi);
    }
    const auto seps = detail::materialize_separators(lv.cur, metrics);
    held.resize(previous.size() + current.size() + seps.size());
    for (const auto& s : seps) {
      if (lv.pmc(lv.cur, s.with(lv.added))) add(s.with(lv.added));
      if (s.contains(lv.added) || is_minimal_separator(lv.prev, s)) continue;
      const auto comps = full_components(lv.cur, s);
      for (const auto& t : seps)
        for (const auto& c : comps)
          if (const VertexSet d = s | (t & c); lv.pmc(lv.cur, d)) add(d);
    }
    held.resize(previous.size() + current.size() + seps.size());
    previous = std::move(current);
    held.resize(previous.size());
  }
  if (metrics) metrics->pmc_yields += previous.size();
  return {previous.begin(), previous.end()};
}

/// Incremental enumeration with the five duplicate-avoidance checks: every
/// PMC is appended to Π_i exactly once, without consulting Π_i for membership.
/// The families Π_i are still stored level to level.
inline std::vector<VertexSet> enumerate_nondup(const Graph& g, Metrics* metrics = nullptr, Gates gates = {}) {
  detail::Stopwatch clock(metrics);
  std::vector<VertexSet> previous{VertexSet(g.order(), {g.vertex_at(1)})};
  RetainedSets held(metrics, previous.size());
  for (std::size_t i = 2; i <= g.order(); ++i) {
    const detail::Level lv(g, i, metrics);
    std::vector<VertexSet> current;
    for (const auto& pi : previous) {
      if (lv.pmc(lv.cur, pi.with(lv.added))) current.push_back(pi.with(lv.added));
      if (lv.pmc(lv.cur, pi)) current.push_back(pi);
    }
    const auto seps = detail::materialize_separators(lv.cur, metrics);
    held.resize(previous.size() + current.size() + seps.size());
    auto gen = detail::generate_new(detail::StoredSeparators{&seps}, lv, gates, false);
    while (auto d = gen.next()) {
      current.push_back(*d);
      held.resize(previous.size() + current.size() + seps.size());
    }
    previous = std::move(current);
    held.resize(previous.size());
  }
  if (metrics) metrics->pmc_yields += previous.size();
  return previous;
}

/// Depth-first enumeration in polynomial space.
///
/// For i = 1..n the generation step yields the new PMCs of G_i one at a time;
/// each is immediately carried through G_{i+1}, ..., G_n (at every level
/// exactly one of π ∪ {v_j}, π is a PMC of G_j) and returned. No family of
/// PMCs or separators is ever stored.
class DfsStream {
 public:
  explicit DfsStream(const Graph& g, Metrics* metrics = nullptr, Gates gates = {})
      : graph_(&g), metrics_(metrics), gates_(gates) {}

  std::optional<VertexSet> next() {
    detail::Stopwatch clock(metrics_);
    const auto started = std::chrono::steady_clock::now();
    while (true) {
      if (!generator_.active()) {
        if (level_ == graph_->order()) return std::nullopt;
        ++level_;
        const detail::Level lv(*graph_, level_, metrics_);
        generator_ = detail::generate_new(detail::StreamedSeparators{lv.cur, metrics_}, lv, gates_, true);
      }
      auto generated = generator_.next();
      if (!generated) continue;
      RetainedSets held(metrics_, 2);
      VertexSet pmc = extend(*generated);
      origin_ = {level_, *generated};
      if (metrics_) {
        ++metrics_->pmc_yields;
        metrics_->max_delay = std::max<std::chrono::nanoseconds>(metrics_->max_delay,
                                                                  std::chrono::steady_clock::now() - started);
      }
      return pmc;
    }
  }

  /// Origin of the most recent output.
  const Origin& last_origin() const { return origin_; }

 private:
  // Carries a PMC of G_level through every later prefix graph.
  VertexSet extend(VertexSet pi) const {
    for (std::size_t j = level_ + 1; j <= graph_->order(); ++j) {
      const detail::Level lv(*graph_, j, metrics_);
      const VertexSet grown = pi.with(lv.added);
      if (lv.pmc(lv.cur, grown)) pi = grown;
      else if (!lv.pmc(lv.cur, pi)) {
        throw InconsistencyError("depth-first extension: neither {" + to_label_string(pi) + "} nor its union with " +
                                 std::to_string(lv.added + 1) + " is a PMC of G_" + std::to_string(j));
      }
    }
    return pi;
  }

  const Graph* graph_;
  Metrics* metrics_;
  Gates gates_;
  std::size_t level_ = 0;
  Generator<VertexSet> generator_;
  Origin origin_;
};

inline DfsStream enumerate_dfs(const Graph& g, Metrics* metrics = nullptr, Gates gates = {}) {
  return DfsStream(g, metrics, gates);
}

/// Whether (s, t, c) is the first triple of the level-i generation loops
/// producing d = s ∪ (t ∩ c), with the loops rerun over fresh separator streams.
inline bool not_yet_seen(const Graph& g, std::size_t level, const VertexSet& d, const VertexSet& s,
                         const VertexSet& t, const VertexSet& c) {
  if (level < 2) throw std::invalid_argument("not_yet_seen: generation loops start at level 2");
  const detail::Level lv(g, level, nullptr);
  return detail::first_producer(detail::StreamedSeparators{lv.cur, nullptr}, lv, d, s, t, c);
}

/// Uniform pull interface over the three algorithms. bt and nondup compute
/// their full result on construction; dfs produces outputs on demand.
class PmcStream {
 public:
  PmcStream(const Graph& g, Algorithm algorithm, Metrics* metrics = nullptr, Gates gates = {})
      : algorithm_(algorithm) {
    switch (algorithm) {
      case Algorithm::kBt: {
        auto all = enumerate_bt(g, metrics);
        state_ = Stored{{all.begin(), all.end()}, 0};
        break;
      }
      case Algorithm::kNondup:
        state_ = Stored{enumerate_nondup(g, metrics, gates), 0};
        break;
      case Algorithm::kDfs:
        state_ = DfsStream(g, metrics, gates);
        break;
    }
  }

  Algorithm algorithm() const { return algorithm_; }

  std::optional<VertexSet> next() {
    if (auto* dfs = std::get_if<DfsStream>(&state_)) return dfs->next();
    auto& stored = std::get<Stored>(state_);
    if (stored.pos == stored.sets.size()) return std::nullopt;
    return stored.sets[stored.pos++];
  }

 private:
  using Stored = detail::StoredPmcs;
  Algorithm algorithm_;
  std::variant<Stored, DfsStream> state_;
};

/// Drains a stream into a list, in emission order.
template <typename Stream>
std::vector<VertexSet> collect(Stream&& stream) {
  std::vector<VertexSet> out;
  while (auto s = stream.next()) out.push_back(*s);
  return out;
}

}  // namespace pmc

#endif  // PMC_ENUMERATORS_HPP
