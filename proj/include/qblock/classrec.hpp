#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qblock/blocks.hpp"
#include "qblock/graph.hpp"

namespace qblock {

enum class GraphClass { Forest, Outerplanar, BlockGraph, Unsupported };

inline std::string to_string(GraphClass c) {
  switch (c) {
    case GraphClass::Forest: return "Forest";
    case GraphClass::Outerplanar: return "Outerplanar";
    case GraphClass::BlockGraph: return "BlockGraph";
    case GraphClass::Unsupported: return "Unsupported";
  }
  return "?";
}

struct EdgeClassification {
  std::vector<Edge> outer;
  std::vector<Edge> inner;
};

struct CycleStructure {
  /// Cyclic order, starting at the smallest vertex and heading to its smaller cycle neighbour.
  std::vector<Vertex> cycle;
  std::vector<Edge> chords;
};

namespace detail {

inline bool connected_without(const ColoredGraph& g, Vertex a, Vertex b) {
  const int n = g.n();
  Vertex start = -1;
  for (Vertex v = 0; v < n; ++v)
    if (v != a && v != b) {
      start = v;
      break;
    }
  if (start < 0) return true;
  std::vector<char> seen(n, 0);
  seen[a] = seen[b] = 1;
  seen[start] = 1;
  std::vector<Vertex> stack{start};
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n - 2;
}

inline bool is_complete(const ColoredGraph& g) { return g.m() == static_cast<std::size_t>(g.n()) * (g.n() - 1) / 2; }

inline bool is_biconnected(const ColoredGraph& g) {
  if (g.n() < 3 || !is_connected(g)) return g.n() <= 2 && is_connected(g);
  return cut_vertices(g).empty();
}

}  // namespace detail

/// Inner edges are exactly those whose endpoints form a 2-separator.
inline EdgeClassification classify_edges(const ColoredGraph& b) {
  if (b.n() < 3 || !detail::is_biconnected(b)) throw NotBiconnected("edge classification needs a biconnected graph on >= 3 vertices");
  EdgeClassification out;
  for (auto e : b.edges()) (detail::connected_without(b, e.first, e.second) ? out.outer : out.inner).push_back(e);
  return out;
}

inline CycleStructure hamiltonian_cycle(const ColoredGraph& b) {
  auto cls = classify_edges(b);
  const int n = b.n();
  std::vector<std::vector<Vertex>> ring(n);
  for (auto [u, v] : cls.outer) {
    ring[u].push_back(v);
    ring[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (ring[v].size() != 2) throw NotOuterplanarBlock("outer edges do not form a spanning cycle");
    std::sort(ring[v].begin(), ring[v].end());
  }
  CycleStructure out;
  out.cycle.push_back(0);
  Vertex prev = 0, cur = ring[0][0];
  while (cur != 0) {
    if (static_cast<int>(out.cycle.size()) >= n) throw NotOuterplanarBlock("outer edges do not form a spanning cycle");
    out.cycle.push_back(cur);
    Vertex nxt = ring[cur][0] == prev ? ring[cur][1] : ring[cur][0];
    prev = cur;
    cur = nxt;
  }
  if (static_cast<int>(out.cycle.size()) != n) throw NotOuterplanarBlock("outer edges form several cycles");
  out.chords = std::move(cls.inner);
  return out;
}

inline std::optional<CycleStructure> try_hamiltonian_cycle(const ColoredGraph& b) {
  try {
    return hamiltonian_cycle(b);
  } catch (const NotOuterplanarBlock&) {
    return std::nullopt;
  }
}

/// Block kinds the engine has atom handlers for.
enum class BlockKind { Small, Complete, Outerplanar, Other };

inline BlockKind block_kind(const ColoredGraph& b) {
  if (b.n() <= 2) return BlockKind::Small;
  if (detail::is_complete(b)) return BlockKind::Complete;
  if (try_hamiltonian_cycle(b)) return BlockKind::Outerplanar;
  return BlockKind::Other;
}

/// Forest > BlockGraph > Outerplanar; anything else is Unsupported.
inline GraphClass classify(const ColoredGraph& g) {
  const auto comps = connected_components(g);
  if (g.m() + comps.size() == static_cast<std::size_t>(g.n())) return GraphClass::Forest;
  bool all_complete = true;
  bool all_outerplanar = true;
  for (const auto& block : biconnected_components(g)) {
    auto sub = induced_subgraph(g, block).graph;
    auto kind = block_kind(sub);
    if (kind != BlockKind::Small && kind != BlockKind::Complete) all_complete = false;
    // K3 is the only complete block that is also outerplanar past the trivial sizes.
    bool outer = kind == BlockKind::Small || kind == BlockKind::Outerplanar || (kind == BlockKind::Complete && sub.n() <= 3);
    if (!outer) all_outerplanar = false;
  }
  if (all_complete) return GraphClass::BlockGraph;
  if (all_outerplanar) return GraphClass::Outerplanar;
  return GraphClass::Unsupported;
}

}  // namespace qblock
