#ifndef PMC_SEPARATORS_HPP
#define PMC_SEPARATORS_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmc/graph.hpp"
#include "pmc/metrics.hpp"

namespace pmc {

/// Resumable, polynomial-space stream over the minimal separators of a graph view.
///
/// Every minimal separator S has at least two full components. Its canonical
/// side is the full component holding the smallest vertex `a` that lies in any
/// full component; S = N(C) for that component C. The stream walks anchors a
/// in ascending order and, for each, runs a binary-partition search over
/// connected sets C ∋ a: a node fixes IN ⊆ C and OUT ∩ C = ∅, branches on the
/// smallest undecided neighbor of IN, and is kept only if some minimal
/// separator still fits. Fitting is decided exactly by close separators: for a
/// component D of G \ N[IN], S' = N(D) is a minimal separator whose a-side A
/// is the inclusion-smallest a-side containing IN, so a fit exists iff some
/// such A avoids OUT. Leaves are exactly the solutions, so each anchor yields
/// each of its separators once and the canonical-anchor filter removes the
/// copies other anchors would produce.
///
/// A stream can be restricted to the separators disjoint from at least one
/// of a list of vertex sets. The restricted stream yields exactly that
/// subsequence of the unrestricted one, in the same order: it only prunes
/// search nodes whose committed boundary N(IN) ∩ OUT (which lies inside every
/// separator below the node) meets all of the sets.
///
/// Retained state is the search stack: at most n frames of two sets each.
class SeparatorStream {
 public:
  explicit SeparatorStream(const GraphView& g, Metrics* metrics = nullptr,
                           std::vector<VertexSet> disjoint_from_one_of = {})
      : view_(g), metrics_(metrics), held_(metrics, 0), avoid_(std::move(disjoint_from_one_of)) {}

  SeparatorStream(SeparatorStream&&) = default;
  SeparatorStream& operator=(SeparatorStream&&) = default;

  /// Next separator, or nullopt once exhausted.
  std::optional<VertexSet> next() {
    while (true) {
      if (stack_.empty()) {
        if (!advance_anchor()) {
          held_.resize(0);
          return std::nullopt;
        }
        continue;
      }
      Frame& f = stack_.back();
      if (!f.branched) {
        const VertexSet undecided = view_.neighborhood(f.in) - f.out;
        if (undecided.empty()) {
          const VertexSet sep = view_.neighborhood(f.in);
          pop();
          if (avoids_one(sep) && is_canonical(sep)) {
            ++yields_;
            if (metrics_) ++metrics_->separator_yields;
            return sep;
          }
          continue;
        }
        f.branch = undecided.first();
        f.branched = true;
        Frame child{f.in.with(f.branch), f.out};
        if (fits(child.in, child.out)) push(std::move(child));
        continue;
      }
      // Left subtree done: this frame becomes its own right child.
      f.out.insert(f.branch);
      f.branched = false;
      if (!fits(f.in, f.out)) pop();
    }
  }

  std::size_t yields() const { return yields_; }
  std::size_t retained_sets() const { return 2 * stack_.size() + avoid_.size(); }
  std::size_t peak_retained_sets() const { return peak_; }
  const GraphView& view() const { return view_; }

 private:
  struct Frame {
    VertexSet in;
    VertexSet out;
    Vertex branch = 0;
    bool branched = false;
  };

  bool advance_anchor() {
    const VertexSet& vs = view_.vertices();
    anchor_ = started_ ? vs.next_after(anchor_) : vs.first();
    started_ = true;
    if (anchor_ == VertexSet::kMaxVertices) return false;
    VertexSet in(view_.capacity());
    in.insert(anchor_);
    const VertexSet out = vs & VertexSet::below(view_.capacity(), anchor_);
    if (fits(in, out)) push({in, out});
    return true;
  }

  bool avoids_one(const VertexSet& committed) const {
    if (avoid_.empty()) return true;
    for (const auto& f : avoid_)
      if (!committed.intersects(f)) return true;
    return false;
  }

  bool fits(const VertexSet& in, const VertexSet& out) const {
    if (!avoid_.empty() && !avoids_one(view_.neighborhood(in) & out)) return false;
    const VertexSet far = view_.vertices() - view_.closed_neighborhood(in);
    VertexSet rest = far;
    while (!rest.empty()) {
      const VertexSet d = view_.component_of(rest.first(), rest);
      rest -= d;
      const VertexSet sep = view_.neighborhood(d);
      const VertexSet a_side = view_.component_of(anchor_, view_.vertices() - sep);
      if (!a_side.intersects(out)) return true;
    }
    return false;
  }

  // No full component other than the anchor's may contain a smaller vertex.
  bool is_canonical(const VertexSet& sep) const {
    VertexSet rest = view_.vertices() - sep;
    while (!rest.empty()) {
      const Vertex low = rest.first();
      if (low >= anchor_) break;
      const VertexSet comp = view_.component_of(low, rest);
      rest -= comp;
      if (view_.neighborhood(comp) == sep) return false;
    }
    return true;
  }

  void push(Frame f) {
    stack_.push_back(std::move(f));
    peak_ = std::max(peak_, retained_sets());
    held_.resize(retained_sets());
  }

  void pop() {
    stack_.pop_back();
    held_.resize(retained_sets());
  }

  GraphView view_;
  Metrics* metrics_;
  RetainedSets held_;
  std::vector<VertexSet> avoid_;
  std::vector<Frame> stack_;
  Vertex anchor_ = 0;
  bool started_ = false;
  std::size_t yields_ = 0;
  std::size_t peak_ = 0;
};

inline SeparatorStream separators(const GraphView& g, Metrics* metrics = nullptr) {
  return SeparatorStream(g, metrics);
}

/// The minimal separators contained in `within`, in stream order.
inline SeparatorStream separators_within(const GraphView& g, const VertexSet& within, Metrics* metrics = nullptr) {
  return SeparatorStream(g, metrics, {g.vertices() - within});
}

/// Number of minimal separators, by draining a stream.
inline std::size_t count_separators(const GraphView& g) {
  SeparatorStream s(g);
  std::size_t count = 0;
  while (s.next()) ++count;
  return count;
}

class BudgetExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// All minimal separators by exhaustive subset scan, straight from the
/// definition: S is a minimal (a,b)-separator for some pair a, b in distinct
/// components of G \ S, and putting back any single vertex of S reconnects a and b.
inline std::set<VertexSet> separators_oracle(const GraphView& g, std::size_t budget = 15) {
  const std::size_t n = g.order();
  if (n > budget) {
    throw BudgetExceeded("separators_oracle: " + std::to_string(n) + " vertices exceeds budget " +
                         std::to_string(budget));
  }
  const std::vector<Vertex> verts = g.vertices().to_vector();
  std::set<VertexSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    VertexSet s(g.capacity());
    for (std::size_t b = 0; b < n; ++b)
      if (mask >> b & 1U) s.insert(verts[b]);
    const VertexSet rest = g.vertices() - s;
    bool minimal_for_some_pair = false;
    for (Vertex a : rest) {
      const VertexSet comp_a = g.component_of(a, rest);
      for (Vertex b : rest - comp_a) {
        if (b < a) continue;
        bool every_vertex_needed = true;
        for (Vertex x : s) {
          const VertexSet back = rest.with(x);
          if (!g.component_of(a, back).contains(b)) {
            every_vertex_needed = false;
            break;
          }
        }
        if (every_vertex_needed) {
          minimal_for_some_pair = true;
          break;
        }
      }
      if (minimal_for_some_pair) break;
    }
    if (minimal_for_some_pair) out.insert(s);
  }
  return out;
}

}  // namespace pmc

#endif  // PMC_SEPARATORS_HPP
