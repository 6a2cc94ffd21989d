#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "qblock/blocks.hpp"
#include "qblock/classrec.hpp"
#include "qblock/graph.hpp"
#include "qblock/perm_group.hpp"

namespace qblock {

/// Canonical byte string for rooted (or center-rooted) colored graphs in the
/// supported classes. Equal codes iff isomorphic; never a hash.
struct CanonCode {
  std::string bytes;

  friend auto operator<=>(const CanonCode&, const CanonCode&) = default;
};

inline constexpr int kIsoBruteForceLimit = 10;

/// Lexicographically least colour- and root-preserving isomorphism a -> b, if any.
inline std::optional<Permutation> brute_force_isomorphism(const RootedGraph& a, const RootedGraph& b) {
  if (a.graph.n() > kIsoBruteForceLimit || b.graph.n() > kIsoBruteForceLimit)
    throw TooLarge("brute-force isomorphism limited to " + std::to_string(kIsoBruteForceLimit) + " vertices");
  if (a.graph.n() != b.graph.n() || a.graph.m() != b.graph.m() || a.root.has_value() != b.root.has_value())
    return std::nullopt;
  detail::IsoSearch search(a.graph, b.graph, identity_permutation(a.graph.n()));
  if (a.root && !search.fix(*a.root, *b.root)) return std::nullopt;
  return search.find();
}

struct AtomCanon {
  std::string code;
  /// order[i] = block vertex placed at canonical position i.
  std::vector<Vertex> order;
};

namespace detail {

inline void append_label(std::string& out, const std::string& label) {
  out += std::to_string(label.size());
  out += ':';
  out += label;
}

inline std::vector<Vertex> sorted_by_label(const std::vector<std::string>& labels) {
  std::vector<Vertex> order(labels.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return labels[a] < labels[b]; });
  return order;
}

inline AtomCanon labelled_sequence(const char* tag, const std::vector<Vertex>& order, const std::vector<std::string>& labels) {
  AtomCanon out{tag + std::to_string(order.size()) + ";", order};
  for (Vertex v : order) append_label(out.code, labels[v]);
  return out;
}

inline AtomCanon outerplanar_atom(const ColoredGraph& b, const CycleStructure& cs, const std::vector<std::string>& labels) {
  const int n = b.n();
  std::optional<AtomCanon> best;
  std::vector<int> pos(n);
  for (int dir : {1, -1}) {
    for (int start = 0; start < n; ++start) {
      std::vector<Vertex> seq(n);
      for (int i = 0; i < n; ++i) {
        seq[i] = cs.cycle[((start + dir * i) % n + n) % n];
        pos[seq[i]] = i;
      }
      AtomCanon cand = labelled_sequence("aO", seq, labels);
      std::vector<std::pair<int, int>> chords;
      for (auto [u, v] : cs.chords) chords.emplace_back(std::min(pos[u], pos[v]), std::max(pos[u], pos[v]));
      std::sort(chords.begin(), chords.end());
      cand.code += '|';
      for (auto [x, y] : chords) cand.code += std::to_string(x) + ',' + std::to_string(y) + ';';
      if (!best || cand.code < best->code) best = std::move(cand);
    }
  }
  return *best;
}

inline constexpr std::uint64_t kGenericCandidateLimit = 2000000;

// Exhaustive canonical form: permute within (label, degree) cells, keep the least code.
inline AtomCanon generic_atom(const ColoredGraph& b, const std::vector<std::string>& labels) {
  const int n = b.n();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](Vertex v) { return std::make_pair(labels[v], b.degree(v)); };
  std::sort(order.begin(), order.end(), [&](Vertex x, Vertex y) { return key(x) < key(y); });
  std::vector<std::pair<int, int>> cells;
  std::uint64_t candidates = 1;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && key(order[j]) == key(order[i])) ++j;
    cells.emplace_back(i, j);
    for (int k = 2; k <= j - i; ++k) {
      candidates *= static_cast<std::uint64_t>(k);
      if (candidates > kGenericCandidateLimit) throw TooLarge("block too symmetric for exhaustive canonical form");
    }
    i = j;
  }
  std::optional<AtomCanon> best;
  auto emit = [&]() {
    AtomCanon cand = labelled_sequence("aG", order, labels);
    cand.code += '|';
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) cand.code += b.adjacent(order[i], order[j]) ? '1' : '0';
    if (!best || cand.code < best->code) best = std::move(cand);
  };
  auto rec = [&](auto& self, std::size_t cell) -> void {
    if (cell == cells.size()) {
      emit();
      return;
    }
    auto [lo, hi] = cells[cell];
    std::sort(order.begin() + lo, order.begin() + hi);
    do {
      self(self, cell + 1);
    } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  rec(rec, 0);
  return *best;
}

}  // namespace detail

/// Canonical code and vertex order of a block whose vertices carry string labels.
///
/// Edges and single vertices sort their labels, complete blocks sort the label
/// multiset, outerplanar blocks take the least of the 2n rotations/reflections of
/// their Hamiltonian cycle (labels plus chord positions), and anything else falls
/// back to an exhaustive search when allow_generic is set.
inline AtomCanon canonical_atom(const ColoredGraph& b, const std::vector<std::string>& labels, bool allow_generic = true) {
  if (static_cast<int>(labels.size()) != b.n()) throw std::invalid_argument("one label per block vertex expected");
  switch (block_kind(b)) {
    case BlockKind::Small: return detail::labelled_sequence(b.n() == 1 ? "a1" : "a2", detail::sorted_by_label(labels), labels);
    case BlockKind::Complete: return detail::labelled_sequence("aK", detail::sorted_by_label(labels), labels);
    case BlockKind::Outerplanar: return detail::outerplanar_atom(b, hamiltonian_cycle(b), labels);
    case BlockKind::Other: break;
  }
  if (!allow_generic) throw UnsupportedClass("block is neither complete nor outerplanar");
  return detail::generic_atom(b, labels);
}

inline std::vector<std::string> color_labels(const ColoredGraph& g) {
  std::vector<std::string> out(g.n());
  for (Vertex v = 0; v < g.n(); ++v) out[v] = std::to_string(g.color(v));
  return out;
}

/// Bottom-up canonical codes over a block decomposition oriented away from a root.
///
/// The root is a vertex (TreeNode::cut, any vertex allowed) or a block. A vertex
/// code describes the part of the graph hanging below that vertex, rooted at it;
/// a block code describes the block together with everything below it, rooted at
/// the block's parent vertex.
class BlockCoder {
 public:
  BlockCoder(const ColoredGraph& g, const std::vector<VertexSet>& blocks, TreeNode root, bool allow_generic = true)
      : g_(g), blocks_(blocks), root_(root), allow_generic_(allow_generic) {
    vertex_blocks_.assign(g.n(), {});
    for (int b = 0; b < static_cast<int>(blocks_.size()); ++b)
      for (Vertex v : blocks_[b]) vertex_blocks_[v].push_back(b);
    orient();
    compute();
  }

  const std::string& vertex_code(Vertex v) const { return vertex_code_.at(v); }
  const std::string& block_code(int b) const { return block_code_.at(b); }

  /// Code of the whole decomposition seen from the root.
  std::string root_code() const {
    if (root_.is_cut()) return vertex_code(root_.id);
    return block_code(root_.id);
  }

  std::optional<Vertex> parent_of_block(int b) const {
    Vertex p = block_parent_.at(b);
    return p < 0 ? std::nullopt : std::optional<Vertex>(p);
  }
  const std::vector<int>& child_blocks(Vertex v) const { return child_blocks_.at(v); }

  /// Labels for the vertices of block b (in block order): the parent vertex gets
  /// "R", every other vertex its own hanging code.
  std::vector<std::string> block_labels(int b) const {
    std::vector<std::string> labels;
    for (Vertex v : blocks_[b]) labels.push_back(v == block_parent_[b] ? std::string("R") : vertex_code_[v]);
    return labels;
  }

 private:
  void orient() {
    const int nb = static_cast<int>(blocks_.size());
    block_parent_.assign(nb, -1);
    child_blocks_.assign(g_.n(), {});
    std::vector<char> block_seen(nb, 0), vertex_seen(g_.n(), 0);
    // BFS over (is_block, id)
    std::vector<TreeNode> queue{root_};
    if (root_.is_block()) block_seen[root_.id] = 1;
    else vertex_seen[root_.id] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      TreeNode cur = queue[head];
      if (cur.is_block()) {
        for (Vertex v : blocks_[cur.id])
          if (!vertex_seen[v]) {
            vertex_seen[v] = 1;
            queue.push_back(TreeNode::cut(v));
          }
      } else {
        for (int b : vertex_blocks_[cur.id])
          if (!block_seen[b]) {
            block_seen[b] = 1;
            block_parent_[b] = cur.id;
            child_blocks_[cur.id].push_back(b);
            queue.push_back(TreeNode::block(b));
          }
      }
    }
    order_ = std::move(queue);
  }

  void compute() {
    vertex_code_.assign(g_.n(), {});
    block_code_.assign(blocks_.size(), {});
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
      if (it->is_cut()) {
        Vertex v = it->id;
        std::vector<std::string> kids;
        for (int b : child_blocks_[v]) kids.push_back(block_code_[b]);
        std::sort(kids.begin(), kids.end());
        std::string code = "V" + std::to_string(g_.color(v)) + "[";
        for (auto& k : kids) code += k;
        code += "]";
        vertex_code_[v] = std::move(code);
      } else {
        int b = it->id;
        auto sub = induced_subgraph(g_, blocks_[b]).graph;
        auto atom = canonical_atom(sub, block_labels(b), allow_generic_);
        std::string tag = block_parent_[b] < 0 ? "U" : "B";
        block_code_[b] = tag + std::to_string(atom.code.size()) + ":" + atom.code;
      }
    }
  }

  const ColoredGraph& g_;
  const std::vector<VertexSet>& blocks_;
  TreeNode root_;
  bool allow_generic_;
  std::vector<std::vector<int>> vertex_blocks_;
  std::vector<Vertex> block_parent_;
  std::vector<std::vector<int>> child_blocks_;
  std::vector<TreeNode> order_;
  std::vector<std::string> vertex_code_;
  std::vector<std::string> block_code_;
};

/// Canonical code of a connected rooted graph. Unrooted graphs are rooted at their
/// block-tree center. Blocks outside the supported kinds are only coded (by
/// exhaustive search) when allow_generic is set.
inline CanonCode canon_code_of(const RootedGraph& r, bool allow_generic) {
  const auto t = block_tree(r.graph);
  if (r.root) {
    if (*r.root < 0 || *r.root >= r.graph.n()) throw UnknownVertex("root outside graph");
    return {BlockCoder(r.graph, t.blocks(), TreeNode::cut(*r.root), allow_generic).root_code()};
  }
  BlockCoder coder(r.graph, t.blocks(), t.center(), allow_generic);
  return {t.center().is_cut() ? "U" + coder.root_code() : coder.root_code()};
}

/// Strict mode refuses Unsupported graphs; forced mode codes them anyway.
inline CanonCode canon_code(const RootedGraph& r, GraphClass cls, bool forced = false) {
  if (cls == GraphClass::Unsupported && !forced) throw UnsupportedClass("canonical codes need a supported graph class");
  return canon_code_of(r, forced);
}

inline CanonCode canon_code(const RootedGraph& r) { return canon_code(r, classify(r.graph)); }

}  // namespace qblock
