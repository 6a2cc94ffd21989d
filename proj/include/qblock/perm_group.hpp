#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "qblock/classrec.hpp"
#include "qblock/graph.hpp"

namespace qblock {

using Permutation = std::vector<Vertex>;

inline Permutation identity_permutation(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline Permutation compose(const Permutation& first, const Permutation& then) {
  Permutation out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = then[first[i]];
  return out;
}

/// Permutation group on 0..degree-1 given by generators, with its exact order.
struct ClassicalPermGroup {
  int degree = 0;
  std::vector<Permutation> generators;
  std::uint64_t order = 1;

  friend auto operator<=>(const ClassicalPermGroup&, const ClassicalPermGroup&) = default;

  /// All elements by closure; throws TooLarge past the limit.
  std::vector<Permutation> elements(std::size_t limit = 500000) const {
    std::set<Permutation> seen{identity_permutation(degree)};
    std::vector<Permutation> frontier{identity_permutation(degree)};
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& p : frontier)
        for (const auto& s : generators) {
          auto q = compose(p, s);
          if (seen.insert(q).second) {
            if (seen.size() > limit) throw TooLarge("group too large to enumerate");
            next.push_back(std::move(q));
          }
        }
      frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
  }
};

namespace detail {

// Backtracking search for colour-preserving isomorphisms a -> b extending a partial map.
class IsoSearch {
 public:
  IsoSearch(const ColoredGraph& a, const ColoredGraph& b, std::vector<Vertex> order)
      : a_(a), b_(b), order_(std::move(order)), map_(a.n(), -1), used_(b.n(), 0) {}

  bool fix(Vertex x, Vertex y) {
    if (map_[x] == y) return true;
    if (map_[x] != -1 || used_[y] || !compatible(x, y)) return false;
    map_[x] = y;
    used_[y] = 1;
    return true;
  }

  std::optional<Permutation> find() {
    if (a_.n() != b_.n()) return std::nullopt;
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool compatible(Vertex x, Vertex y) const {
    if (a_.color(x) != b_.color(y) || a_.degree(x) != b_.degree(y)) return false;
    for (Vertex x2 = 0; x2 < a_.n(); ++x2) {
      Vertex y2 = map_[x2];
      if (y2 >= 0 && a_.adjacent(x, x2) != b_.adjacent(y, y2)) return false;
    }
    return true;
  }

  bool extend(std::size_t i) {
    while (i < order_.size() && map_[order_[i]] != -1) ++i;
    if (i == order_.size()) return true;
    Vertex x = order_[i];
    for (Vertex y = 0; y < b_.n(); ++y) {
      if (used_[y] || !compatible(x, y)) continue;
      map_[x] = y;
      used_[y] = 1;
      if (extend(i + 1)) return true;
      map_[x] = -1;
      used_[y] = 0;
    }
    return false;
  }

  const ColoredGraph& a_;
  const ColoredGraph& b_;
  std::vector<Vertex> order_;
  Permutation map_;
  std::vector<char> used_;
};

// Visit order that keeps each new vertex adjacent to earlier ones where possible.
inline std::vector<Vertex> bfs_order(const ColoredGraph& g, std::vector<Vertex> prefix) {
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> out;
  for (Vertex v : prefix)
    if (!seen[v]) {
      seen[v] = 1;
      out.push_back(v);
    }
  for (Vertex s = 0; s <= g.n(); ++s) {
    for (std::size_t head = 0; head < out.size(); ++head)
      for (Vertex w : g.neighbors(out[head]))
        if (!seen[w]) {
          seen[w] = 1;
          out.push_back(w);
        }
    if (s < g.n() && !seen[s]) {
      seen[s] = 1;
      out.push_back(s);
    }
  }
  return out;
}

inline ColoredGraph with_pins(const ColoredGraph& g, const VertexSet& pins) {
  ColoredGraph out = g;
  Color top = 0;
  for (Vertex v = 0; v < g.n(); ++v) top = std::max(top, g.color(v));
  for (std::size_t i = 0; i < pins.size(); ++i) out.set_color(pins[i], top + 1 + i);
  return out;
}

inline ClassicalPermGroup dihedral_automorphisms(const ColoredGraph& g, const CycleStructure& cs) {
  const int n = g.n();
  ClassicalPermGroup out{n, {}, 0};
  for (int dir : {1, -1}) {
    for (int shift = 0; shift < n; ++shift) {
      Permutation p(n);
      for (int i = 0; i < n; ++i) p[cs.cycle[i]] = cs.cycle[((dir * i + shift) % n + n) % n];
      bool ok = true;
      for (Vertex v = 0; v < n && ok; ++v) ok = g.color(v) == g.color(p[v]);
      for (auto [u, v] : g.edges())
        if (ok && !g.adjacent(p[u], p[v])) ok = false;
      if (!ok) continue;
      ++out.order;
      if (p != identity_permutation(n)) out.generators.push_back(std::move(p));
    }
  }
  std::sort(out.generators.begin(), out.generators.end());
  return out;
}

}  // namespace detail

inline constexpr int kBruteForceLimit = 12;

/// Colour- and pin-preserving automorphisms of g.
///
/// Biconnected outerplanar graphs only admit the dihedral maps of their unique
/// Hamiltonian cycle, so those are filtered directly. Otherwise the group is found
/// by search along a stabiliser chain: the order is the product of the orbit
/// lengths of each base point under the pointwise stabiliser of the earlier ones,
/// and one witness per orbit point forms a strong generating set.
inline ClassicalPermGroup automorphism_group(const ColoredGraph& g, const VertexSet& pins = {}) {
  const ColoredGraph h = detail::with_pins(g, pins);
  const int n = h.n();
  if (n >= 3 && detail::is_biconnected(h)) {
    if (auto cs = try_hamiltonian_cycle(h)) return detail::dihedral_automorphisms(h, *cs);
  }
  if (n > kBruteForceLimit) throw TooLarge("automorphism search limited to " + std::to_string(kBruteForceLimit) + " vertices");
  ClassicalPermGroup out{n, {}, 1};
  std::vector<Vertex> base = detail::bfs_order(h, {});
  for (std::size_t i = 0; i < base.size(); ++i) {
    const Vertex v = base[i];
    std::vector<Permutation> level_gens;
    std::set<Vertex> orbit{v};
    for (Vertex w = 0; w < n; ++w) {
      if (orbit.count(w) || h.color(w) != h.color(v) || h.degree(w) != h.degree(v)) continue;
      detail::IsoSearch search(h, h, detail::bfs_order(h, std::vector<Vertex>(base.begin(), base.begin() + i + 1)));
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = search.fix(base[j], base[j]);
      if (!ok || !search.fix(v, w)) continue;
      auto found = search.find();
      if (!found) continue;
      level_gens.push_back(*found);
      // close the orbit under what we have so far
      std::vector<Vertex> stack(orbit.begin(), orbit.end());
      stack.push_back(w);
      orbit.insert(w);
      while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (const auto& p : level_gens)
          if (orbit.insert(p[x]).second) stack.push_back(p[x]);
      }
    }
    out.order *= orbit.size();
    for (auto& p : level_gens) out.generators.push_back(std::move(p));
  }
  return out;
}

/// Orbit partition of subset under the group, each orbit sorted, ordered by smallest member.
inline std::vector<VertexSet> orbits(const ClassicalPermGroup& group, const VertexSet& subset) {
  std::vector<int> parent(group.degree);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : group.generators)
    for (int x = 0; x < group.degree; ++x) parent[find(x)] = find(p[x]);
  std::vector<VertexSet> out;
  std::vector<int> slot(group.degree, -1);
  for (Vertex v : subset) {
    if (v < 0 || v >= group.degree) throw UnknownVertex("orbit query outside group degree");
    int r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  for (auto& o : out) std::sort(o.begin(), o.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qblock
