#pragma once

#include <algorithm>
#include <future>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qblock/blocks.hpp"
#include "qblock/canon.hpp"
#include "qblock/classrec.hpp"
#include "qblock/graph.hpp"
#include "qblock/perm_group.hpp"
#include "qblock/qexpr.hpp"
#include "qblock/wl.hpp"

namespace qblock {

inline constexpr const char* kForcedAssumption = "assumes iso ⇔ quantum-iso for encountered rooted subgraphs";

struct QutResult {
  QGroupExpr expr;
  std::vector<std::string> assumptions;
  GraphClass graph_class = GraphClass::Forest;
};

struct EngineOptions {
  bool force = false;
  /// Upper bound on concurrent tasks for the top-level children; 1 runs serially.
  int jobs = 1;
};

/// Results keyed by canonical code. Codes determine the rooted colored graph up to
/// isomorphism, so one table can be shared across graphs and threads.
class QutMemo {
 public:
  std::optional<QGroupExpr> get(const std::string& key) const {
    std::lock_guard lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  QGroupExpr put(const std::string& key, const QGroupExpr& value) {
    std::lock_guard lock(mutex_);
    return table_.try_emplace(key, value).first->second;
  }
  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::mutex mutex_;
  std::map<std::string, QGroupExpr> table_;
};

/// Two children cut vertices of a block share a class iff their hanging codes agree.
struct CutVertexClass {
  Vertex alpha;
  std::string code;
};

/// Child blocks of a cut vertex with equal codes (rooted at that cut vertex).
struct BlockChildClass {
  std::vector<int> blocks;
  std::string code;
};

/// Atom result with the orbit partition of its vertices.
struct AtomResult {
  QGroupExpr expr;
  std::vector<VertexSet> orbits;
};

inline QutResult qut(const ColoredGraph& g, const EngineOptions& opt, QutMemo* memo = nullptr);

namespace detail {

inline QGroupExpr symq_or_trivial(std::size_t k) { return k <= 1 ? QGroupExpr::trivial() : QGroupExpr::symq(k); }

inline std::vector<VertexSet> color_classes(const ColoredGraph& g) {
  std::map<Color, VertexSet> by_color;
  for (Vertex v = 0; v < g.n(); ++v) by_color[g.color(v)].push_back(v);
  std::vector<VertexSet> out;
  for (auto& [c, vs] : by_color) out.push_back(std::move(vs));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<VertexSet> all_orbits(const ClassicalPermGroup& group) {
  return orbits(group, identity_permutation(group.degree));
}

// Runs fn over items, at most jobs at a time; results keep the input order.
template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, Fn fn, int jobs) {
  using R = decltype(fn(items.front()));
  std::vector<R> out;
  out.reserve(items.size());
  if (jobs <= 1 || items.size() < 2) {
    for (const auto& x : items) out.push_back(fn(x));
    return out;
  }
  for (std::size_t lo = 0; lo < items.size(); lo += static_cast<std::size_t>(jobs)) {
    std::vector<std::future<R>> batch;
    for (std::size_t i = lo; i < std::min(items.size(), lo + static_cast<std::size_t>(jobs)); ++i)
      batch.push_back(std::async(std::launch::async, fn, std::cref(items[i])));
    for (auto& f : batch) out.push_back(f.get());
  }
  return out;
}

}  // namespace detail

/// Qut of a single block (or an edge or a vertex) with vertex colours, plus its orbits.
///
/// Complete blocks give free products of S^+ over colour classes. The two
/// non-complete 4-vertex blocks (C4 and the diamond) are handled through their
/// complement, a coloured forest. Larger outerplanar blocks have no quantum
/// symmetry and give their classical automorphism group.
inline AtomResult qut_block_atom_with_orbits(const ColoredGraph& block, std::optional<Vertex> pin = std::nullopt,
                                             QutMemo* memo = nullptr) {
  const ColoredGraph b = pin ? detail::with_pins(block, {*pin}) : block;
  const int n = b.n();
  if (n == 0) throw std::invalid_argument("empty block");
  if (!detail::is_biconnected(b) && n > 1) throw NotBiconnected("atom expects a block");
  if (n == 1) return {QGroupExpr::trivial(), {{0}}};
  if (n == 2) {
    if (b.color(0) == b.color(1)) return {QGroupExpr::symq(2), {{0, 1}}};
    return {QGroupExpr::trivial(), {{0}, {1}}};
  }
  if (detail::is_complete(b)) {
    auto classes = detail::color_classes(b);
    std::vector<QGroupExpr> parts;
    for (const auto& c : classes) parts.push_back(detail::symq_or_trivial(c.size()));
    return {free_product(parts), classes};
  }
  if (n == 4) {
    auto expr = qut(complement(b), EngineOptions{}, memo).expr;
    auto aut = detail::all_orbits(automorphism_group(b));
    return {expr, quantum_orbits(expr, aut, stable_coloring(b).vertex_classes())};
  }
  if (block_kind(b) == BlockKind::Outerplanar) {
    auto group = automorphism_group(b);
    auto orbs = detail::all_orbits(group);
    return {normalize(QGroupExpr::classical(std::move(group))), orbs};
  }
  throw UnsupportedBlock("block on " + std::to_string(n) + " vertices is neither complete nor outerplanar");
}

inline QGroupExpr qut_block_atom(const ColoredGraph& block, std::optional<Vertex> pin = std::nullopt) {
  return qut_block_atom_with_orbits(block, pin).expr;
}

/// Recursive computation over the block tree of one connected graph.
///
/// The decomposition is oriented away from the block-tree center, or away from a
/// given root vertex when the stabiliser of that vertex is wanted. Cut vertices
/// compose their child-block classes by free wreath products with S^+(k); blocks
/// colour their child cut vertices by code and take the inhomogeneous free wreath
/// product over the orbits of their coloured atom.
class Engine {
 public:
  Engine(const ColoredGraph& g, std::optional<Vertex> root, const EngineOptions& opt, QutMemo& memo)
      : g_(g),
        tree_(block_tree(g)),
        root_(root ? TreeNode::cut(*root) : tree_.center()),
        coder_(g_, tree_.blocks(), root_, opt.force),
        opt_(opt),
        memo_(memo) {
    if (root && (*root < 0 || *root >= g.n())) throw UnknownVertex("root outside graph");
  }

  const BlockTree& tree() const { return tree_; }
  const BlockCoder& coder() const { return coder_; }

  QGroupExpr run() { return root_.is_cut() ? qut_rooted_cut(root_.id, 0) : qut_rooted_block(root_.id, 0); }

  QGroupExpr qut_central_cut() {
    if (!tree_.center().is_cut() || root_ != tree_.center()) throw std::logic_error("center is not a cut vertex");
    return qut_rooted_cut(root_.id, 0);
  }
  QGroupExpr qut_central_block() {
    if (!tree_.center().is_block() || root_ != tree_.center()) throw std::logic_error("center is not a block");
    return qut_rooted_block(root_.id, 0);
  }

  std::vector<BlockChildClass> child_block_classes(Vertex alpha) const {
    std::map<std::string, std::vector<int>> by_code;
    for (int b : coder_.child_blocks(alpha)) by_code[coder_.block_code(b)].push_back(b);
    std::vector<BlockChildClass> out;
    for (auto& [code, bs] : by_code) out.push_back({bs, code});
    return out;
  }

  std::vector<CutVertexClass> child_cut_classes(int b) const {
    std::vector<CutVertexClass> out;
    for (Vertex v : tree_.blocks()[b])
      if (v != coder_.parent_of_block(b) && !coder_.child_blocks(v).empty()) out.push_back({v, coder_.vertex_code(v)});
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return std::tie(x.code, x.alpha) < std::tie(y.code, y.alpha); });
    return out;
  }

  /// Qut(X^{<=alpha})_alpha.
  QGroupExpr qut_rooted_cut(Vertex alpha, int depth = 1) {
    const std::string& key = coder_.vertex_code(alpha);
    if (auto hit = memo_.get(key)) return *hit;
    auto classes = child_block_classes(alpha);
    check_levels(classes);
    auto parts = detail::parallel_map(
        classes,
        [&](const BlockChildClass& c) { return free_wreath(qut_rooted_block(c.blocks.front(), depth + 1), detail::symq_or_trivial(c.blocks.size())); },
        depth == 0 ? opt_.jobs : 1);
    return memo_.put(key, parts.empty() ? QGroupExpr::trivial() : free_product(parts));
  }

  /// Qut(X^{<=B})_alpha for alpha the parent of B, or Qut(X) when B is the root block.
  QGroupExpr qut_rooted_block(int b, int depth = 1) {
    const std::string& key = coder_.block_code(b);
    if (auto hit = memo_.get(key)) return *hit;
    const VertexSet& vs = tree_.blocks()[b];
    const auto labels = coder_.block_labels(b);
    const auto sub = induced_subgraph(g_, vs).graph;
    const auto canon = canonical_atom(sub, labels, opt_.force);

    // Canonically labelled copy, colours = dense ranks of the labels.
    std::vector<std::string> sorted_labels = labels;
    std::sort(sorted_labels.begin(), sorted_labels.end());
    sorted_labels.erase(std::unique(sorted_labels.begin(), sorted_labels.end()), sorted_labels.end());
    const int n = sub.n();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[canon.order[i]] = i;
    ColoredGraph atom(n);
    for (int i = 0; i < n; ++i) {
      auto rank = std::lower_bound(sorted_labels.begin(), sorted_labels.end(), labels[canon.order[i]]) - sorted_labels.begin();
      atom.set_color(i, static_cast<Color>(rank));
    }
    for (auto [u, v] : sub.edges()) atom.add_edge(pos[u], pos[v]);

    check_levels(child_cut_classes(b));
    const AtomResult base = qut_block_atom_with_orbits(atom, std::nullopt, &memo_);
    auto factors = detail::parallel_map(
        base.orbits,
        [&](const VertexSet& orbit) {
          const Vertex v = vs[canon.order[orbit.front()]];
          const bool child_cut = v != coder_.parent_of_block(b) && !coder_.child_blocks(v).empty();
          return OrbitFactor{child_cut ? qut_rooted_cut(v, depth + 1) : QGroupExpr::trivial(), orbit.size()};
        },
        depth == 0 ? opt_.jobs : 1);
    QGroupExpr out = inhom_free_wreath(factors, base.expr);
    if (out.is(Kind::InhomFreeWreath) && is_classical(base.expr)) {
      // The base acts on more points than its expression shows; spell it out as a
      // permutation group on the block so equal fibres fold into a free wreath.
      auto fs = out.orbit_factors();
      if (std::all_of(fs.begin(), fs.end(), [&](const OrbitFactor& f) { return f.group == fs.front().group; }))
        out = free_wreath(fs.front().group, normalize(QGroupExpr::classical(automorphism_group(atom))));
    }
    return memo_.put(key, out);
  }

 private:
  bool levels_apply() const { return root_ == tree_.center(); }

  // Isomorphic branches sit on the same level of the block tree.
  void check_levels(const std::vector<BlockChildClass>& classes) const {
    if (!levels_apply()) return;
    for (const auto& c : classes)
      for (int b : c.blocks)
        if (tree_.level(TreeNode::block(b)) != tree_.level(TreeNode::block(c.blocks.front())))
          throw std::logic_error("isomorphic child blocks on different levels");
  }
  void check_levels(const std::vector<CutVertexClass>& classes) const {
    if (!levels_apply()) return;
    for (std::size_t i = 1; i < classes.size(); ++i)
      if (classes[i].code == classes[i - 1].code &&
          tree_.level(TreeNode::cut(classes[i].alpha)) != tree_.level(TreeNode::cut(classes[i - 1].alpha)))
        throw std::logic_error("cut vertices of one class on different levels");
  }

  const ColoredGraph& g_;
  BlockTree tree_;
  TreeNode root_;
  BlockCoder coder_;
  EngineOptions opt_;
  QutMemo& memo_;
};

/// Qut of a connected graph.
inline QGroupExpr qut_connected(const ColoredGraph& g, const EngineOptions& opt = {}, QutMemo* memo = nullptr) {
  QutMemo local;
  return Engine(g, std::nullopt, opt, memo ? *memo : local).run();
}

/// Stabiliser Qut(X)_root of a connected graph at its root vertex.
inline QGroupExpr qut_rooted(const RootedGraph& r, const EngineOptions& opt = {}, QutMemo* memo = nullptr) {
  QutMemo local;
  return Engine(r.graph, r.root, opt, memo ? *memo : local).run();
}

/// Qut of any graph in a supported class. Components are grouped by canonical
/// code; k isomorphic copies of X_i contribute Qut(X_i) wr* S^+(k).
inline QutResult qut(const ColoredGraph& g, const EngineOptions& opt, QutMemo* memo) {
  QutMemo local;
  QutMemo& m = memo ? *memo : local;
  QutResult out;
  out.graph_class = classify(g);
  if (out.graph_class == GraphClass::Unsupported) {
    if (!opt.force) throw ClassRefused("graph is not a forest, outerplanar graph or block graph");
    out.assumptions.emplace_back(kForcedAssumption);
  }
  if (g.n() == 0) return out;
  const auto comps = connected_components(g);
  if (comps.size() == 1) {
    out.expr = qut_connected(g, opt, &m);
    return out;
  }
  std::map<std::string, std::vector<ColoredGraph>> by_code;
  for (const auto& c : comps) {
    auto sub = induced_subgraph(g, c).graph;
    by_code[canon_code_of(RootedGraph{sub, std::nullopt, {}}, opt.force).bytes].push_back(std::move(sub));
  }
  std::vector<const std::vector<ColoredGraph>*> classes;
  for (const auto& [code, members] : by_code) classes.push_back(&members);
  EngineOptions inner = opt;
  inner.jobs = 1;
  auto factors = detail::parallel_map(
      classes, [&](const std::vector<ColoredGraph>* members) { return OrbitFactor{qut_connected(members->front(), inner, &m), members->size()}; },
      opt.jobs);
  std::vector<QGroupExpr> base;
  for (const auto& f : factors) base.push_back(detail::symq_or_trivial(f.orbit_size));
  out.expr = inhom_free_wreath(factors, free_product(base));
  return out;
}

inline QutResult qut(const ColoredGraph& g, bool force = false) { return qut(g, EngineOptions{force, 1}); }

inline bool has_quantum_symmetry(const ColoredGraph& g) { return !is_classical(qut(g).expr); }

}  // namespace qblock
