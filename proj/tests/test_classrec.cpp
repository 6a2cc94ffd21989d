#include <gtest/gtest.h>

#include "qblock/classrec.hpp"
#include "support/oracles.hpp"

using namespace qblock;

namespace {

ColoredGraph cycle(int n) {
  ColoredGraph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

ColoredGraph complete(int n) {
  ColoredGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST(Classify, Examples) {
  EXPECT_EQ(classify(ColoredGraph(3, {{0, 1}})), GraphClass::Forest);
  EXPECT_EQ(classify(ColoredGraph(0)), GraphClass::Forest);
  EXPECT_EQ(classify(complete(3)), GraphClass::BlockGraph);
  EXPECT_EQ(classify(complete(5)), GraphClass::BlockGraph);
  EXPECT_EQ(classify(cycle(4)), GraphClass::Outerplanar);
  ColoredGraph wheel = cycle(5);
  wheel = ColoredGraph(6, wheel.edges());
  for (int v = 0; v < 5; ++v) wheel.add_edge(5, v);
  EXPECT_EQ(classify(wheel), GraphClass::Unsupported);
  // K4 glued to a 5-cycle
  ColoredGraph mixed(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 3}});
  EXPECT_EQ(classify(mixed), GraphClass::Unsupported);
  EXPECT_EQ(classify(ColoredGraph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}})), GraphClass::BlockGraph);
}

TEST(Classify, K4IsNotOuterplanarButK23Neither) {
  ColoredGraph k23(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  EXPECT_EQ(block_kind(k23), BlockKind::Other);
  EXPECT_EQ(block_kind(complete(4)), BlockKind::Complete);
  EXPECT_EQ(block_kind(cycle(6)), BlockKind::Outerplanar);
}

TEST(EdgeClasses, ChordsAreInner) {
  ColoredGraph g = cycle(6);
  g.add_edge(0, 3);
  auto cls = classify_edges(g);
  EXPECT_EQ(cls.inner, (std::vector<Edge>{{0, 3}}));
  EXPECT_EQ(cls.outer.size(), 6u);
  auto cs = hamiltonian_cycle(g);
  EXPECT_EQ(cs.cycle, (std::vector<Vertex>{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(cs.chords, (std::vector<Edge>{{0, 3}}));
}

TEST(EdgeClasses, Errors) {
  EXPECT_THROW(classify_edges(ColoredGraph(3, {{0, 1}, {1, 2}})), NotBiconnected);
  EXPECT_THROW(hamiltonian_cycle(complete(4)), NotOuterplanarBlock);
}

TEST(EdgeClasses, DissectionsRecoverTheirCycle) {
  for (int n = 4; n <= 7; ++n)
    for (const auto& g : oracle::polygon_dissections(n)) {
      auto cs = hamiltonian_cycle(g);
      ASSERT_EQ(static_cast<int>(cs.cycle.size()), n);
      // the polygon is labelled in order, so the cycle must be 0..n-1
      for (int i = 0; i < n; ++i) EXPECT_EQ(cs.cycle[i], i);
      EXPECT_EQ(cs.chords.size(), g.m() - n);
    }
}

TEST(Classify, GeneratorsStayInTheirClass) {
  oracle::Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    EXPECT_EQ(classify(oracle::relabeled(oracle::random_tree(rng, 8), rng)), GraphClass::Forest);
    EXPECT_NE(classify(oracle::random_outerplanar(rng, 9)), GraphClass::Unsupported);
    auto b = classify(oracle::random_block_graph(rng, 9));
    EXPECT_TRUE(b == GraphClass::BlockGraph || b == GraphClass::Forest);
  }
}
