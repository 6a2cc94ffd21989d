#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "qblock/graph.hpp"

namespace qblock {

inline VertexSet cut_vertices(const ColoredGraph& g);
inline std::vector<VertexSet> biconnected_components(const ColoredGraph& g);

namespace detail {

struct DfsBlocks {
  std::vector<VertexSet> blocks;
  std::vector<char> is_cut;
};

// Iterative Hopcroft-Tarjan lowpoint DFS with an edge stack.
inline DfsBlocks dfs_blocks(const ColoredGraph& g) {
  const int n = g.n();
  DfsBlocks out;
  out.is_cut.assign(n, 0);
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::size_t> next_edge(n, 0);
  std::vector<Edge> edge_stack;
  int timer = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = timer++;
    int root_children = 0;
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      Vertex v = stack.back();
      const auto& nb = g.neighbors(v);
      if (next_edge[v] < nb.size()) {
        Vertex w = nb[next_edge[v]++];
        if (disc[w] == -1) {
          parent[w] = v;
          disc[w] = low[w] = timer++;
          edge_stack.emplace_back(v, w);
          if (v == root) ++root_children;
          stack.push_back(w);
        } else if (w != parent[v] && disc[w] < disc[v]) {
          low[v] = std::min(low[v], disc[w]);
          edge_stack.emplace_back(v, w);
        }
        continue;
      }
      stack.pop_back();
      Vertex p = parent[v];
      if (p == -1) continue;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        if (p != root) out.is_cut[p] = 1;
        std::vector<Vertex> block;
        while (true) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e.first);
          block.push_back(e.second);
          if (e == Edge{p, v}) break;
        }
        out.blocks.push_back(make_vertex_set(std::move(block)));
      }
    }
    if (root_children > 1) out.is_cut[root] = 1;
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

}  // namespace detail

/// Vertices whose removal increases the number of connected components.
inline VertexSet cut_vertices(const ColoredGraph& g) {
  auto dfs = detail::dfs_blocks(g);
  VertexSet out;
  for (Vertex v = 0; v < g.n(); ++v)
    if (dfs.is_cut[v]) out.push_back(v);
  return out;
}

/// Blocks as vertex sets, lexicographically ordered. Isolated vertices belong to no block.
inline std::vector<VertexSet> biconnected_components(const ColoredGraph& g) { return detail::dfs_blocks(g).blocks; }

// ---------------------------------------------------------------------------
// Block tree

enum class NodeKind { block, cut };

/// A block-tree node: a block id (index into BlockTree::blocks) or a cut vertex.
struct TreeNode {
  NodeKind kind;
  int id;

  static TreeNode block(int b) { return {NodeKind::block, b}; }
  static TreeNode cut(Vertex v) { return {NodeKind::cut, v}; }
  bool is_block() const { return kind == NodeKind::block; }
  bool is_cut() const { return kind == NodeKind::cut; }

  friend auto operator<=>(const TreeNode&, const TreeNode&) = default;
};

inline std::string to_string(const TreeNode& node) {
  return (node.is_block() ? "B" : "v") + std::to_string(node.id);
}

/// Bipartite block/cut-vertex tree of a connected graph, rooted at its center.
///
/// Levels are the peeling rounds: a node's level is the round in which it becomes
/// a leaf when leaves are removed repeatedly. Blocks sit on even levels, cut
/// vertices on odd levels, and the center alone has the maximal level.
class BlockTree {
 public:
  BlockTree(std::vector<VertexSet> blocks, VertexSet cuts, int n) : blocks_(std::move(blocks)), cuts_(std::move(cuts)) {
    vertex_blocks_.assign(n, {});
    for (int b = 0; b < static_cast<int>(blocks_.size()); ++b)
      for (Vertex v : blocks_[b]) vertex_blocks_[v].push_back(b);
    is_cut_.assign(n, 0);
    for (Vertex c : cuts_) is_cut_[c] = 1;
    for (int b = 0; b < static_cast<int>(blocks_.size()); ++b)
      for (Vertex v : blocks_[b])
        if (is_cut_[v]) tree_edges_.emplace_back(b, v);
    peel();
    orient();
  }

  const std::vector<VertexSet>& blocks() const noexcept { return blocks_; }
  const VertexSet& cuts() const noexcept { return cuts_; }
  /// (block id, cut vertex) incidences.
  const std::vector<std::pair<int, Vertex>>& tree_edges() const noexcept { return tree_edges_; }
  TreeNode center() const noexcept { return center_; }
  int num_vertices() const noexcept { return static_cast<int>(vertex_blocks_.size()); }

  bool is_cut(Vertex v) const { return v >= 0 && v < num_vertices() && is_cut_[v]; }
  const std::vector<int>& blocks_of(Vertex v) const { return vertex_blocks_.at(v); }

  bool contains(const TreeNode& node) const {
    return node.is_block() ? node.id >= 0 && node.id < static_cast<int>(blocks_.size()) : is_cut(node.id);
  }

  int level(const TreeNode& node) const {
    check(node);
    return node.is_block() ? block_level_[node.id] : cut_level_[node.id];
  }

  std::optional<TreeNode> parent(const TreeNode& node) const {
    check(node);
    if (node.is_block()) {
      Vertex p = block_parent_[node.id];
      return p < 0 ? std::nullopt : std::optional<TreeNode>(TreeNode::cut(p));
    }
    int p = cut_parent_[node.id];
    return p < 0 ? std::nullopt : std::optional<TreeNode>(TreeNode::block(p));
  }

  std::vector<TreeNode> children(const TreeNode& node) const {
    check(node);
    std::vector<TreeNode> out;
    if (node.is_block()) {
      for (Vertex v : blocks_[node.id])
        if (is_cut_[v] && cut_parent_[v] == node.id) out.push_back(TreeNode::cut(v));
    } else {
      for (int b : vertex_blocks_[node.id])
        if (block_parent_[b] == node.id) out.push_back(TreeNode::block(b));
    }
    return out;
  }

  /// Vertices of every block in the subtree below (and including) node.
  VertexSet vertices_below(const TreeNode& node) const {
    check(node);
    std::vector<Vertex> out;
    std::vector<TreeNode> stack{node};
    if (node.is_cut()) out.push_back(node.id);
    while (!stack.empty()) {
      TreeNode cur = stack.back();
      stack.pop_back();
      if (cur.is_block()) out.insert(out.end(), blocks_[cur.id].begin(), blocks_[cur.id].end());
      for (const TreeNode& ch : children(cur)) stack.push_back(ch);
    }
    return make_vertex_set(std::move(out));
  }

 private:
  void check(const TreeNode& node) const {
    if (!contains(node)) throw UnknownNode("no block-tree node " + to_string(node));
  }

  int node_index(const TreeNode& node) const {
    return node.is_block() ? node.id : static_cast<int>(blocks_.size()) + cut_index_.at(node.id);
  }

  void peel() {
    const int nb = static_cast<int>(blocks_.size());
    cut_index_.assign(num_vertices(), -1);
    for (int i = 0; i < static_cast<int>(cuts_.size()); ++i) cut_index_[cuts_[i]] = i;
    const int total = nb + static_cast<int>(cuts_.size());
    std::vector<std::vector<int>> adj(total);
    for (auto [b, v] : tree_edges_) {
      int c = nb + cut_index_[v];
      adj[b].push_back(c);
      adj[c].push_back(b);
    }
    std::vector<int> degree(total), lev(total, -1);
    for (int i = 0; i < total; ++i) degree[i] = static_cast<int>(adj[i].size());
    std::vector<int> frontier;
    for (int i = 0; i < total; ++i)
      if (degree[i] <= 1) frontier.push_back(i);
    int round = 0;
    std::vector<int> last;
    int removed = 0;
    while (!frontier.empty()) {
      for (int x : frontier) lev[x] = round;
      removed += static_cast<int>(frontier.size());
      std::vector<int> next;
      for (int x : frontier)
        for (int y : adj[x])
          if (lev[y] < 0 && --degree[y] <= 1) next.push_back(y);
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      last = std::move(frontier);
      frontier = std::move(next);
      ++round;
    }
    if (removed != total || last.size() != 1) throw std::logic_error("block tree peeling did not end in a single center");
    block_level_.assign(nb, 0);
    cut_level_.assign(num_vertices(), -1);
    for (int b = 0; b < nb; ++b) block_level_[b] = lev[b];
    for (Vertex c : cuts_) cut_level_[c] = lev[nb + cut_index_[c]];
    center_ = last[0] < nb ? TreeNode::block(last[0]) : TreeNode::cut(cuts_[last[0] - nb]);
  }

  void orient() {
    block_parent_.assign(blocks_.size(), -1);
    cut_parent_.assign(num_vertices(), -1);
    std::vector<char> block_seen(blocks_.size(), 0), cut_seen(num_vertices(), 0);
    std::vector<TreeNode> queue{center_};
    if (center_.is_block()) block_seen[center_.id] = 1;
    else cut_seen[center_.id] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      TreeNode cur = queue[head];
      if (cur.is_block()) {
        for (Vertex v : blocks_[cur.id])
          if (is_cut_[v] && !cut_seen[v]) {
            cut_seen[v] = 1;
            cut_parent_[v] = cur.id;
            queue.push_back(TreeNode::cut(v));
          }
      } else {
        for (int b : vertex_blocks_[cur.id])
          if (!block_seen[b]) {
            block_seen[b] = 1;
            block_parent_[b] = cur.id;
            queue.push_back(TreeNode::block(b));
          }
      }
    }
  }

  std::vector<VertexSet> blocks_;
  VertexSet cuts_;
  std::vector<std::pair<int, Vertex>> tree_edges_;
  std::vector<std::vector<int>> vertex_blocks_;
  std::vector<char> is_cut_;
  std::vector<int> cut_index_;
  std::vector<int> block_level_;
  std::vector<int> cut_level_;
  std::vector<Vertex> block_parent_;
  std::vector<int> cut_parent_;
  TreeNode center_{NodeKind::block, 0};
};

inline BlockTree block_tree(const ColoredGraph& g) {
  if (g.n() == 0 || !is_connected(g)) throw NotConnected("block tree requires a non-empty connected graph");
  if (g.n() == 1) return BlockTree({VertexSet{0}}, {}, 1);
  auto dfs = detail::dfs_blocks(g);
  VertexSet cuts;
  for (Vertex v = 0; v < g.n(); ++v)
    if (dfs.is_cut[v]) cuts.push_back(v);
  return BlockTree(std::move(dfs.blocks), std::move(cuts), g.n());
}

/// Induced subgraph with an optional distinguished (pinned) vertex.
struct RootedGraph {
  ColoredGraph graph;
  std::optional<Vertex> root;
  /// Original vertex of each local vertex when the graph was cut out of a larger one.
  std::vector<Vertex> to_original;
};

/// X^{<=node}: the part of g hanging below node in the center-rooted block tree.
/// Cut nodes are returned rooted at themselves; block nodes unrooted.
inline RootedGraph subgraph_below(const ColoredGraph& g, const BlockTree& t, const TreeNode& node) {
  VertexSet vs = t.vertices_below(node);
  auto sub = induced_subgraph(g, vs);
  RootedGraph out{std::move(sub.graph), std::nullopt, std::move(sub.to_original)};
  if (node.is_cut() && node != t.center()) {
    auto it = std::lower_bound(vs.begin(), vs.end(), node.id);
    out.root = static_cast<Vertex>(it - vs.begin());
  }
  return out;
}

}  // namespace qblock
