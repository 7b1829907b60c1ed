#include <gtest/gtest.h>

#include <sstream>

#include "pmc/graph.hpp"
#include "pmc/graph_io.hpp"
#include "test_support.hpp"

using namespace pmc;
using testing_support::labels;

namespace {

Graph c4() { return load_graph("1 2\n2 3\n3 4\n4 1"); }

}  // namespace

TEST(VertexSet, BasicOperations) {
  VertexSet s(10, {1, 4, 7});
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.contains(4));
  EXPECT_FALSE(s.contains(5));
  EXPECT_EQ(s.first(), 1u);
  EXPECT_EQ(s.next_after(1), 4u);
  EXPECT_EQ(s.with(5).size(), 4u);
  EXPECT_EQ(s.without(4).size(), 2u);
  EXPECT_THROW(s.insert(10), std::out_of_range);
  EXPECT_TRUE(VertexSet(10, {1, 4}).is_subset_of(s));
  EXPECT_FALSE(VertexSet(10, {2}).intersects(s));
  EXPECT_EQ((s | VertexSet(10, {2})).size(), 4u);
  EXPECT_EQ((s & VertexSet(10, {4, 9})), VertexSet(10, {4}));
  EXPECT_EQ((s - VertexSet(10, {4})), VertexSet(10, {1, 7}));
  EXPECT_EQ(to_label_string(s), "2 5 8");
  std::ostringstream os;
  os << s;
  EXPECT_EQ(os.str(), "{2 5 8}");
}

TEST(VertexSet, OrderIsLexicographicOnSortedMembers) {
  EXPECT_LT(VertexSet(8, {0, 5}), VertexSet(8, {1}));
  EXPECT_LT(VertexSet(8, {0, 1}), VertexSet(8, {0, 1, 2}));
  EXPECT_LT(VertexSet(8, {0, 1, 7}), VertexSet(8, {0, 2}));
  EXPECT_LT(VertexSet(8), VertexSet(8, {0}));
  EXPECT_EQ(VertexSet(8, {3}) <=> VertexSet(8, {3}), std::strong_ordering::equal);
}

TEST(VertexSet, WordBoundaries) {
  VertexSet s(256, {0, 63, 64, 127, 128, 255});
  std::vector<Vertex> seen(s.begin(), s.end());
  EXPECT_EQ(seen, (std::vector<Vertex>{0, 63, 64, 127, 128, 255}));
  EXPECT_EQ(VertexSet::full(130).size(), 130u);
  EXPECT_EQ(VertexSet::below(130, 65).size(), 65u);
}

TEST(Graph, RejectsBadInput) {
  EXPECT_THROW(Graph(0, {}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(Graph(257, {}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {}).with_ordering({0, 0, 1}), std::invalid_argument);
}

TEST(LoadGraph, EdgeListCycle) {
  const Graph g = c4();
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_TRUE(g.adjacent(3, 0));
  EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(LoadGraph, EmptyEdgeListWithDeclaredOrder) {
  const Graph g = load_graph("", GraphFormat::kEdgeList, 1);
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(LoadGraph, DimacsTriangle) {
  const Graph g = load_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(g.adjacent(0, 2));
}

TEST(LoadGraph, HeaderAndComments) {
  const Graph g = load_graph("# comment\n5 2\n1 2\n4 5\n");
  EXPECT_EQ(g.order(), 5u);
  EXPECT_EQ(g.edge_count(), 2u);
  // "1 2" is an edge here: a header would leave vertex 3 out of range.
  const Graph h = load_graph("1 2\n2 3\n");
  EXPECT_EQ(h.order(), 3u);
  EXPECT_EQ(h.edge_count(), 2u);
}

TEST(LoadGraph, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) {
    try {
      load_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("1 2\n2 2\n"), 2u);
  EXPECT_EQ(line_of("1 2\n2 1\n"), 2u);
  EXPECT_EQ(line_of("1 2\n2 x\n"), 2u);
  EXPECT_EQ(line_of("1 2\n2 3 4\n"), 2u);
  EXPECT_EQ(line_of("p edge 3 2\ne 1 2\ne 2 4\n"), 3u);
  EXPECT_EQ(line_of("p edge 3 5\ne 1 2\n"), 1u);
  EXPECT_THROW(load_graph(""), ParseError);
}

TEST(LoadGraph, RoundTrip) {
  const Graph g = c4();
  const Graph a = load_graph(to_edge_list(g));
  const Graph b = load_graph(to_dimacs(g));
  EXPECT_EQ(a.edges(), g.edges());
  EXPECT_EQ(b.edges(), g.edges());
}

TEST(Prefix, Examples) {
  const Graph g = c4();
  const GraphView whole = prefix(g, 4);
  EXPECT_EQ(whole.vertices(), g.all_vertices());
  const GraphView two = prefix(g, 2);
  EXPECT_EQ(two.vertices(), labels(g, {1, 2}));
  EXPECT_TRUE(two.adjacent(0, 1));
  const GraphView one = prefix(g, 1);
  EXPECT_EQ(one.vertices().size(), 1u);
  EXPECT_TRUE(one.neighbors(0).empty());
  EXPECT_THROW(prefix(g, 0), std::out_of_range);
  EXPECT_THROW(prefix(g, 5), std::out_of_range);
}

TEST(Prefix, FollowsTheOrdering) {
  const Graph g = c4().with_ordering({2, 0, 3, 1});
  const GraphView two = prefix(g, 2);
  EXPECT_EQ(two.vertices(), labels(g, {3, 1}));
  EXPECT_TRUE(two.neighbors(0).empty());
  EXPECT_EQ(prefix(g, 3).neighbors(0), labels(g, {4}));
}

TEST(ComponentsOf, Examples) {
  const Graph g = c4();
  const GraphView v = full_view(g);

  const auto r13 = components_of(v, labels(g, {1, 3}));
  ASSERT_EQ(r13.components.size(), 2u);
  EXPECT_EQ(r13.components[0], labels(g, {2}));
  EXPECT_EQ(r13.components[1], labels(g, {4}));
  EXPECT_EQ(r13.full_count(), 2u);

  const auto r0 = components_of(v, VertexSet(4));
  ASSERT_EQ(r0.components.size(), 1u);
  EXPECT_EQ(r0.components[0], g.all_vertices());
  EXPECT_TRUE(r0.full_flags[0]);

  const auto r12 = components_of(v, labels(g, {1, 2}));
  ASSERT_EQ(r12.components.size(), 1u);
  EXPECT_EQ(r12.components[0], labels(g, {3, 4}));
  EXPECT_TRUE(r12.full_flags[0]);

  EXPECT_THROW(components_of(prefix(g, 2), labels(g, {3})), std::invalid_argument);
}

TEST(ComponentsOf, NonFullComponent) {
  // Path 1-2-3-4, S = {2}: {1} is full, {3,4} is full; S = {2,3}: {1} sees only 2.
  const Graph g = load_graph("1 2\n2 3\n3 4\n");
  const auto r = components_of(full_view(g), labels(g, {2, 3}));
  ASSERT_EQ(r.components.size(), 2u);
  EXPECT_FALSE(r.full_flags[0]);
  EXPECT_FALSE(r.full_flags[1]);
  EXPECT_TRUE(full_components(full_view(g), labels(g, {2, 3})).empty());
}
