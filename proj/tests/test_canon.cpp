#include <gtest/gtest.h>

#include "qblock/canon.hpp"
#include "support/oracles.hpp"

using namespace qblock;

namespace {

ColoredGraph cycle(int n) {
  ColoredGraph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

std::string code(const ColoredGraph& g, std::optional<Vertex> root = std::nullopt) {
  return canon_code(RootedGraph{g, root, {}}).bytes;
}

}  // namespace

TEST(PermGroup, CycleGroupsAreDihedral) {
  for (int n = 3; n <= 9; ++n) {
    auto g = automorphism_group(cycle(n));
    EXPECT_EQ(g.order, 2u * n);
    EXPECT_EQ(g.elements().size(), 2u * n);
  }
}

TEST(PermGroup, OrdersMatchBruteForce) {
  oracle::Rng rng(1);
  for (int i = 0; i < 150; ++i) {
    auto g = oracle::random_connected(rng, oracle::uniform(rng, 1, 8), 0.3);
    auto grp = automorphism_group(g);
    EXPECT_EQ(grp.order, oracle::aut_count(g));
    EXPECT_EQ(grp.elements().size(), grp.order);
  }
}

TEST(PermGroup, PinsAndOrbits) {
  ColoredGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(automorphism_group(star).order, 6u);
  EXPECT_EQ(automorphism_group(star, {1}).order, 2u);
  auto orbs = orbits(automorphism_group(star), {0, 1, 2, 3});
  EXPECT_EQ(orbs, (std::vector<VertexSet>{{0}, {1, 2, 3}}));
  EXPECT_THROW(automorphism_group(ColoredGraph(13)), TooLarge);
}

TEST(Canon, SmallExamples) {
  ColoredGraph p3(3, {{0, 1}, {1, 2}});
  ColoredGraph p3b(3, {{0, 2}, {2, 1}});
  EXPECT_EQ(code(p3), code(p3b));
  EXPECT_EQ(code(p3, 0), code(p3b, 0));
  EXPECT_NE(code(p3, 0), code(p3, 1));
  EXPECT_NE(code(p3), code(p3, 1));
  ColoredGraph coloured = p3;
  coloured.set_color(0, 3);
  EXPECT_NE(code(coloured), code(p3));
}

TEST(Canon, ChordPositionsMatter) {
  ColoredGraph a = cycle(6), b = cycle(6);
  a.add_edge(0, 3);
  b.add_edge(0, 2);
  EXPECT_NE(code(a), code(b));
  ColoredGraph c = cycle(6);
  c.add_edge(1, 4);
  EXPECT_EQ(code(a), code(c));
}

TEST(Canon, UnsupportedNeedsForce) {
  ColoredGraph k23(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  RootedGraph r{k23, std::nullopt, {}};
  EXPECT_THROW(canon_code(r), UnsupportedClass);
  ColoredGraph relabeled(5, {{4, 2}, {4, 3}, {4, 0}, {1, 2}, {1, 3}, {1, 0}});
  EXPECT_EQ(canon_code(r, GraphClass::Unsupported, true), canon_code(RootedGraph{relabeled, std::nullopt, {}}, GraphClass::Unsupported, true));
}

TEST(Canon, BruteForceIsomorphism) {
  ColoredGraph p3(3, {{0, 1}, {1, 2}});
  ColoredGraph p3b(3, {{0, 2}, {2, 1}});
  auto m = brute_force_isomorphism({p3, 1, {}}, {p3b, 2, {}});
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ((*m)[1], 2);
  EXPECT_FALSE(brute_force_isomorphism({p3, 0, {}}, {p3b, 2, {}}).has_value());
  EXPECT_THROW(brute_force_isomorphism({ColoredGraph(11), std::nullopt, {}}, {ColoredGraph(11), std::nullopt, {}}), TooLarge);
}

TEST(Canon, AgreesWithIsomorphismOnRandomRootedGraphs) {
  oracle::Rng rng(77);
  std::vector<RootedGraph> pool;
  for (int i = 0; i < 120; ++i) {
    const int n = oracle::uniform(rng, 2, 7);
    auto g = i % 2 ? oracle::random_outerplanar(rng, n) : oracle::random_block_graph(rng, n);
    if (classify(g) == GraphClass::Unsupported) continue;
    pool.push_back({g, oracle::uniform(rng, 0, n - 1), {}});
    // an isomorphic copy, so equal codes are actually exercised
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    pool.push_back({relabel(g, perm), perm[*pool.back().root], {}});
  }
  for (std::size_t a = 0; a < pool.size(); ++a)
    for (std::size_t b = a + 1; b < pool.size(); ++b) {
      if (pool[a].graph.n() != pool[b].graph.n()) continue;
      bool iso = brute_force_isomorphism(pool[a], pool[b]).has_value();
      EXPECT_EQ(iso, canon_code(pool[a]) == canon_code(pool[b]));
      EXPECT_EQ(iso, oracle::isomorphic(pool[a].graph, pool[a].root, pool[b].graph, pool[b].root));
    }
}

TEST(Canon, FreeTreeEnumerationCounts) {
  const int rooted[] = {0, 1, 1, 2, 4, 9, 20, 48, 115, 286};
  const int free[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47};
  auto shapes = rooted_trees_upto(9);
  for (int n = 1; n <= 9; ++n) {
    EXPECT_EQ(static_cast<int>(shapes[n].size()), rooted[n]) << n;
    std::set<std::string> ahu;
    for (const auto& t : shapes[n]) ahu.insert(oracle::ahu(t.graph(), 0));
    EXPECT_EQ(static_cast<int>(ahu.size()), rooted[n]) << n;
    auto trees = free_trees(n);
    EXPECT_EQ(static_cast<int>(trees.size()), free[n]) << n;
    std::set<std::string> codes;
    for (const auto& g : trees) codes.insert(oracle::tree_code(g));
    EXPECT_EQ(codes.size(), trees.size());
  }
}
