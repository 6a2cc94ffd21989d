#include <gtest/gtest.h>

#include "qblock/graph.hpp"

using namespace qblock;

TEST(EdgeList, ParsesHeaderEdgesColoursAndComments) {
  auto g = parse_graph("# a path\n3 2\n0 1\n\n1 2  # trailing\nc 2 7\n", GraphFormat::edgelist);
  EXPECT_EQ(g.n(), 3);
  EXPECT_EQ(g.m(), 2u);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.color(2), 7u);
  EXPECT_EQ(g.color(0), 0u);
}

TEST(EdgeList, ReportsLineOfBadToken) {
  try {
    parse_graph("2 1\n0 x\n", GraphFormat::edgelist);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(EdgeList, RejectsSelfLoopAndDuplicate) {
  EXPECT_THROW(parse_graph("2 1\n1 1\n", GraphFormat::edgelist), SelfLoop);
  try {
    parse_graph("3 2\n0 1\n# dup\n1 0\n", GraphFormat::edgelist);
    FAIL();
  } catch (const DuplicateEdge& e) {
    EXPECT_EQ(e.line(), 4u);
  }
}

TEST(EdgeList, RejectsWrongEdgeCountAndMissingHeader) {
  EXPECT_THROW(parse_graph("3 3\n0 1\n", GraphFormat::edgelist), ParseError);
  EXPECT_THROW(parse_graph("# nothing\n", GraphFormat::edgelist), ParseError);
  EXPECT_THROW(parse_graph("2 1\n0 5\n", GraphFormat::edgelist), ParseError);
  EXPECT_THROW(parse_graph("2 4\n", GraphFormat::edgelist), ParseError);
}

TEST(EdgeList, RoundTrips) {
  ColoredGraph g(5, {{0, 1}, {1, 2}, {3, 4}, {0, 4}}, {0, 2, 0, 1, 0});
  EXPECT_EQ(parse_graph(render_edgelist(g), GraphFormat::edgelist), g);
}

TEST(Graph6, KnownStrings) {
  ColoredGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  EXPECT_EQ(render_graph6(c4), "Cl");
  EXPECT_EQ(parse_graph("Cl\n", GraphFormat::graph6), c4);
  EXPECT_EQ(parse_graph(">>graph6<<Cl", GraphFormat::graph6), c4);
  EXPECT_EQ(parse_graph("?", GraphFormat::graph6).n(), 0);
}

TEST(Graph6, RoundTripsLargeHeader) {
  ColoredGraph g(70);
  for (int v = 1; v < 70; ++v) g.add_edge(v - 1, v);
  EXPECT_EQ(parse_graph(render_graph6(g), GraphFormat::graph6), g);
}

TEST(Graph6, RejectsGarbage) {
  EXPECT_THROW(parse_graph("C", GraphFormat::graph6), ParseError);
  EXPECT_THROW(parse_graph("Clxx", GraphFormat::graph6), ParseError);
  EXPECT_THROW(parse_graph("C l", GraphFormat::graph6), ParseError);
}

TEST(Graph, AddEdgeChecks) {
  ColoredGraph g(3);
  g.add_edge(0, 1);
  EXPECT_THROW(g.add_edge(1, 0), DuplicateEdge);
  EXPECT_THROW(g.add_edge(2, 2), SelfLoop);
  EXPECT_THROW(g.add_edge(0, 3), UnknownVertex);
  EXPECT_EQ(g.neighbors(1), VertexSet{0});
}

TEST(Graph, ComplementKeepsColours) {
  ColoredGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {1, 0, 0, 0});
  auto h = complement(c4);
  EXPECT_EQ(h.edges(), (std::vector<Edge>{{0, 2}, {1, 3}}));
  EXPECT_EQ(h.color(0), 1u);
  EXPECT_EQ(complement(h), c4);
}

TEST(Graph, InducedSubgraphAndComponents) {
  ColoredGraph g(6, {{0, 1}, {1, 2}, {3, 4}}, {0, 0, 5, 0, 0, 0});
  auto sub = induced_subgraph(g, {1, 2, 4});
  EXPECT_EQ(sub.graph.n(), 3);
  EXPECT_EQ(sub.graph.edges(), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(sub.graph.color(1), 5u);
  EXPECT_EQ(sub.to_original, (std::vector<Vertex>{1, 2, 4}));
  EXPECT_THROW(induced_subgraph(g, {0, 9}), UnknownVertex);
  EXPECT_EQ(connected_components(g), (std::vector<VertexSet>{{0, 1, 2}, {3, 4}, {5}}));
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_connected(ColoredGraph(1)));
}

TEST(Graph, RelabelMovesEdgesAndColours) {
  ColoredGraph g(3, {{0, 1}}, {4, 0, 0});
  auto h = relabel(g, {2, 0, 1});
  EXPECT_TRUE(h.adjacent(2, 0));
  EXPECT_EQ(h.color(2), 4u);
  EXPECT_EQ(h.m(), 1u);
}
