#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qblock/canon.hpp"
#include "qblock/graph.hpp"

namespace qblock {

/// Rooted tree as a parent array; vertex 0 is the root (parent -1) and every
/// other vertex comes after its parent.
struct RootedTreeShape {
  std::vector<int> parent;

  int size() const { return static_cast<int>(parent.size()); }

  ColoredGraph graph() const {
    ColoredGraph g(size());
    for (int v = 1; v < size(); ++v) g.add_edge(parent[v], v);
    return g;
  }
};

/// All rooted unlabeled trees with 1..max_n vertices, out[k] holding those with k
/// vertices. A tree is a multiset of child subtrees; children are listed in
/// non-increasing (size, index) order so each multiset appears once.
inline std::vector<std::vector<RootedTreeShape>> rooted_trees_upto(int max_n) {
  std::vector<std::vector<RootedTreeShape>> out(std::max(max_n, 0) + 1);
  if (max_n < 1) return out;
  out[1].push_back({{-1}});
  for (int n = 2; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> chosen;
    std::function<void(int, int, int)> rec = [&](int remaining, int max_size, int max_index) {
      if (remaining == 0) {
        RootedTreeShape t{{-1}};
        for (auto [s, i] : chosen) {
          const auto& child = out[s][i].parent;
          const int offset = t.size();
          for (int v = 0; v < s; ++v) t.parent.push_back(v == 0 ? 0 : child[v] + offset);
        }
        out[n].push_back(std::move(t));
        return;
      }
      for (int s = std::min(remaining, max_size); s >= 1; --s) {
        const int top = s == max_size ? max_index : static_cast<int>(out[s].size()) - 1;
        for (int i = top; i >= 0; --i) {
          chosen.emplace_back(s, i);
          rec(remaining - s, s, i);
          chosen.pop_back();
        }
      }
    };
    rec(n - 1, n - 1, static_cast<int>(out[n - 1].size()) - 1);
  }
  return out;
}

/// Unlabeled (free) trees on n vertices, one per isomorphism class, ordered by
/// canonical code.
inline std::vector<ColoredGraph> free_trees(int n) {
  if (n < 1) return {};
  const auto rooted = rooted_trees_upto(n);
  std::map<std::string, ColoredGraph> by_code;
  for (const auto& t : rooted[n]) {
    auto g = t.graph();
    by_code.try_emplace(canon_code(RootedGraph{g, std::nullopt, {}}).bytes, g);
  }
  std::vector<ColoredGraph> out;
  for (auto& [code, g] : by_code) out.push_back(std::move(g));
  return out;
}

}  // namespace qblock
