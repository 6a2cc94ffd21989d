#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qblock/graph.hpp"

namespace qblock {

/// Colouring of ordered vertex pairs produced by 2-dimensional Weisfeiler-Leman.
///
/// Colour ids are dense and assigned in order of first appearance when pairs are
/// scanned lexicographically, so equal partitions give equal id matrices.
class PairColoring {
 public:
  PairColoring() = default;
  PairColoring(int n, std::vector<int> ids, int round) : n_(n), ids_(std::move(ids)), round_(round) {
    canonicalize();
  }

  int n() const noexcept { return n_; }
  int round() const noexcept { return round_; }
  int color(Vertex x, Vertex y) const { return ids_.at(static_cast<std::size_t>(x) * n_ + y); }
  int num_classes() const noexcept { return classes_; }
  const std::vector<int>& ids() const noexcept { return ids_; }

  /// Vertex partition induced by the diagonal classes, each class sorted, ordered
  /// by smallest member.
  std::vector<VertexSet> vertex_classes() const {
    std::map<int, VertexSet> by_color;
    for (Vertex v = 0; v < n_; ++v) by_color[color(v, v)].push_back(v);
    std::vector<VertexSet> out;
    for (auto& [c, vs] : by_color) out.push_back(std::move(vs));
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const PairColoring& a, const PairColoring& b) { return a.n_ == b.n_ && a.ids_ == b.ids_; }

 private:
  void canonicalize() {
    std::map<int, int> remap;
    for (int& id : ids_) {
      auto [it, fresh] = remap.try_emplace(id, static_cast<int>(remap.size()));
      id = it->second;
    }
    classes_ = static_cast<int>(remap.size());
  }

  int n_ = 0;
  std::vector<int> ids_;
  int round_ = 0;
  int classes_ = 0;
};

inline PairColoring initial_coloring(const ColoredGraph& g) {
  const int n = g.n();
  // (diagonal/edge/non-edge, colour(x), colour(y))
  using Key = std::tuple<int, Color, Color>;
  std::map<Key, int> dict;
  std::vector<int> ids(static_cast<std::size_t>(n) * n);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      int kind = x == y ? 0 : (g.adjacent(x, y) ? 1 : 2);
      Key key{kind, g.color(x), g.color(y)};
      auto [it, fresh] = dict.try_emplace(key, static_cast<int>(dict.size()));
      ids[static_cast<std::size_t>(x) * n + y] = it->second;
    }
  }
  return PairColoring(n, std::move(ids), 0);
}

/// One refinement round: the new colour of (x, y) is its old colour together with
/// the multiset of colour pairs (c(x, z), c(z, y)) over all z.
inline PairColoring refine(const ColoredGraph& g, const PairColoring& c) {
  const int n = g.n();
  if (c.n() != n) throw std::invalid_argument("colouring does not match graph");
  // signature = (old colour, sorted (a, b, count) triples)
  using Triple = std::tuple<int, int, int>;
  using Signature = std::pair<int, std::vector<Triple>>;
  std::map<Signature, int> dict;
  std::vector<int> ids(static_cast<std::size_t>(n) * n);
  std::vector<std::pair<int, int>> walks(n);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      for (Vertex z = 0; z < n; ++z) walks[z] = {c.color(x, z), c.color(z, y)};
      std::sort(walks.begin(), walks.end());
      Signature sig{c.color(x, y), {}};
      for (std::size_t i = 0; i < walks.size();) {
        std::size_t j = i;
        while (j < walks.size() && walks[j] == walks[i]) ++j;
        sig.second.emplace_back(walks[i].first, walks[i].second, static_cast<int>(j - i));
        i = j;
      }
      auto [it, fresh] = dict.try_emplace(std::move(sig), static_cast<int>(dict.size()));
      ids[static_cast<std::size_t>(x) * n + y] = it->second;
    }
  }
  return PairColoring(n, std::move(ids), c.round() + 1);
}

inline PairColoring stable_coloring(const ColoredGraph& g) {
  PairColoring c = initial_coloring(g);
  const int cap = std::max(1, g.n() * g.n());
  while (true) {
    PairColoring next = refine(g, c);
    if (next.num_classes() == c.num_classes()) return c;
    if (next.round() > cap) throw std::logic_error("WL refinement exceeded n^2 rounds");
    c = std::move(next);
  }
}

inline bool same_wl_class(const PairColoring& c, std::pair<Vertex, Vertex> p, std::pair<Vertex, Vertex> q) {
  return c.color(p.first, p.second) == c.color(q.first, q.second);
}

}  // namespace qblock
