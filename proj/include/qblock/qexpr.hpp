#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"
#include "qblock/classrec.hpp"
#include "qblock/errors.hpp"
#include "qblock/perm_group.hpp"

namespace qblock {

using BigInt = boost::multiprecision::cpp_int;

class QGroupExpr;

/// One slot of an inhomogeneous free wreath product: the fibre quantum group
/// attached to every point of one base orbit, and the size of that orbit.
struct OrbitFactor;

/// Immutable expression tree over quantum permutation groups.
///
/// The static constructors build raw nodes; free_product, free_wreath,
/// inhom_free_wreath and normalize produce normal forms. Comparison is
/// structural: (kind, parameters, children) lexicographically.
class QGroupExpr {
 public:
  enum class Kind { Trivial, SymQ, Classical, FreeProduct, FreeWreath, InhomFreeWreath };

  QGroupExpr() : QGroupExpr(trivial()) {}

  static QGroupExpr trivial() {
    static const auto node = std::make_shared<const Node>(Node{Kind::Trivial});
    return QGroupExpr(node);
  }
  static QGroupExpr symq(std::size_t n) {
    if (n == 0) throw std::invalid_argument("S^+(0) is not a quantum permutation group");
    Node node{Kind::SymQ};
    node.n = n;
    return QGroupExpr(std::make_shared<const Node>(std::move(node)));
  }
  static QGroupExpr classical(ClassicalPermGroup group) {
    Node node{Kind::Classical};
    node.group = std::move(group);
    return QGroupExpr(std::make_shared<const Node>(std::move(node)));
  }
  static QGroupExpr raw_free_product(std::vector<QGroupExpr> factors) {
    Node node{Kind::FreeProduct};
    node.children = std::move(factors);
    return QGroupExpr(std::make_shared<const Node>(std::move(node)));
  }
  static QGroupExpr raw_free_wreath(QGroupExpr inner, QGroupExpr outer) {
    Node node{Kind::FreeWreath};
    node.children = {std::move(inner), std::move(outer)};
    return QGroupExpr(std::make_shared<const Node>(std::move(node)));
  }
  static inline QGroupExpr raw_inhom_free_wreath(const std::vector<OrbitFactor>& factors, QGroupExpr base);

  Kind kind() const noexcept { return node_->kind; }
  bool is(Kind k) const noexcept { return node_->kind == k; }

  std::size_t symq_degree() const { return node_->n; }
  const ClassicalPermGroup& group() const { return *node_->group; }
  /// FreeProduct factors.
  const std::vector<QGroupExpr>& factors() const { return node_->children; }
  const QGroupExpr& inner() const { return node_->children.at(0); }
  const QGroupExpr& outer() const { return node_->children.at(1); }
  const QGroupExpr& base() const { return node_->children.back(); }
  inline std::vector<OrbitFactor> orbit_factors() const;

  friend std::strong_ordering operator<=>(const QGroupExpr& a, const QGroupExpr& b) { return compare(a, b); }
  friend bool operator==(const QGroupExpr& a, const QGroupExpr& b) { return compare(a, b) == 0; }

 private:
  struct Node {
    explicit Node(Kind k) : kind(k) {}

    Kind kind;
    std::size_t n = 0;
    std::optional<ClassicalPermGroup> group;
    std::vector<QGroupExpr> children;  // InhomFreeWreath: fibres then base
    std::vector<std::size_t> orbit_sizes;
  };

  explicit QGroupExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static std::strong_ordering compare(const QGroupExpr& a, const QGroupExpr& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    const Node& x = *a.node_;
    const Node& y = *b.node_;
    if (auto c = static_cast<int>(x.kind) <=> static_cast<int>(y.kind); c != 0) return c;
    if (auto c = x.n <=> y.n; c != 0) return c;
    if (x.group && y.group) {
      if (auto c = *x.group <=> *y.group; c != 0) return c;
    }
    if (auto c = x.orbit_sizes <=> y.orbit_sizes; c != 0) return c;
    const std::size_t k = std::min(x.children.size(), y.children.size());
    for (std::size_t i = 0; i < k; ++i)
      if (auto c = compare(x.children[i], y.children[i]); c != 0) return c;
    return x.children.size() <=> y.children.size();
  }

  std::shared_ptr<const Node> node_;
};

struct OrbitFactor {
  QGroupExpr group;
  std::size_t orbit_size = 1;

  friend auto operator<=>(const OrbitFactor&, const OrbitFactor&) = default;
  friend bool operator==(const OrbitFactor&, const OrbitFactor&) = default;
};

inline QGroupExpr QGroupExpr::raw_inhom_free_wreath(const std::vector<OrbitFactor>& factors, QGroupExpr base) {
  Node node{Kind::InhomFreeWreath};
  for (const auto& f : factors) {
    node.children.push_back(f.group);
    node.orbit_sizes.push_back(f.orbit_size);
  }
  node.children.push_back(std::move(base));
  return QGroupExpr(std::make_shared<const Node>(std::move(node)));
}

inline std::vector<OrbitFactor> QGroupExpr::orbit_factors() const {
  std::vector<OrbitFactor> out;
  for (std::size_t i = 0; i < node_->orbit_sizes.size(); ++i) out.push_back({node_->children[i], node_->orbit_sizes[i]});
  return out;
}

using Kind = QGroupExpr::Kind;

// ---------------------------------------------------------------------------
// Degrees and normal-form constructors

/// Number of points the expression visibly acts on. Trivial carries no degree:
/// normal forms drop trivial factors, so the fixed points it stood for are unknown.
inline std::optional<std::size_t> degree(const QGroupExpr& e) {
  switch (e.kind()) {
    case Kind::Trivial: return std::nullopt;
    case Kind::SymQ: return e.symq_degree();
    case Kind::Classical: return static_cast<std::size_t>(e.group().degree);
    case Kind::FreeProduct: {
      std::size_t total = 0;
      for (const auto& f : e.factors()) {
        auto d = degree(f);
        if (!d) return std::nullopt;
        total += *d;
      }
      return total;
    }
    case Kind::FreeWreath: {
      auto di = degree(e.inner());
      auto dout = degree(e.outer());
      if (!di || !dout) return std::nullopt;
      return *di * *dout;
    }
    case Kind::InhomFreeWreath: {
      std::size_t total = 0;
      for (const auto& f : e.orbit_factors()) {
        auto d = degree(f.group);
        if (!d) return std::nullopt;
        total += *d * f.orbit_size;
      }
      return total;
    }
  }
  return std::nullopt;
}

/// Flattens, drops trivial factors and sorts. Inputs are assumed normalised.
inline QGroupExpr free_product(const std::vector<QGroupExpr>& factors) {
  if (factors.empty()) throw EmptyList("free product of no factors");
  std::vector<QGroupExpr> flat;
  for (const auto& f : factors) {
    if (f.is(Kind::FreeProduct)) flat.insert(flat.end(), f.factors().begin(), f.factors().end());
    else if (!f.is(Kind::Trivial)) flat.push_back(f);
  }
  if (flat.empty()) return QGroupExpr::trivial();
  if (flat.size() == 1) return flat.front();
  std::sort(flat.begin(), flat.end());
  return QGroupExpr::raw_free_product(std::move(flat));
}

/// inner wr* outer. A free-product outer acts on disjoint point sets, so the
/// wreath distributes over its factors.
inline QGroupExpr free_wreath(const QGroupExpr& inner, const QGroupExpr& outer) {
  if (outer.is(Kind::Trivial)) return inner;
  if (outer.is(Kind::SymQ) && outer.symq_degree() == 1) return inner;
  if (inner.is(Kind::Trivial)) return outer;
  if (!degree(outer)) throw BadOuter("free wreath outer factor has no definite degree");
  if (outer.is(Kind::FreeProduct)) {
    std::vector<QGroupExpr> parts;
    for (const auto& f : outer.factors()) parts.push_back(free_wreath(inner, f));
    return free_product(parts);
  }
  return QGroupExpr::raw_free_wreath(inner, outer);
}

namespace detail {

inline std::optional<std::vector<std::size_t>> symq_sizes(const QGroupExpr& base) {
  if (base.is(Kind::SymQ)) return std::vector<std::size_t>{base.symq_degree()};
  if (!base.is(Kind::FreeProduct)) return std::nullopt;
  std::vector<std::size_t> sizes;
  for (const auto& f : base.factors()) {
    if (!f.is(Kind::SymQ)) return std::nullopt;
    sizes.push_back(f.symq_degree());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace detail

/// (G_1, ..., G_m) wrwr* base, one factor per base orbit (fixed points included).
///
/// Rewrites, in order: trivial base gives the free product of the fibres; trivial
/// fibres give the base; equal fibres over a base whose degree covers every orbit
/// give G wr* base; a base that is a free product of quantum symmetric groups, one
/// per non-singleton orbit, gives the free product of per-orbit free wreaths.
inline QGroupExpr inhom_free_wreath(std::vector<OrbitFactor> factors, const QGroupExpr& base) {
  if (factors.empty()) throw OrbitMismatch("inhomogeneous wreath product needs at least one orbit");
  std::size_t total = 0;
  for (const auto& f : factors) {
    if (f.orbit_size == 0) throw OrbitMismatch("empty orbit");
    total += f.orbit_size;
  }
  if (auto d = degree(base); d && total < *d)
    throw OrbitMismatch("orbits cover " + std::to_string(total) + " points, base acts on " + std::to_string(*d));

  if (base.is(Kind::Trivial)) {
    std::vector<QGroupExpr> groups;
    for (const auto& f : factors) {
      if (f.orbit_size != 1) throw OrbitMismatch("trivial base has only singleton orbits");
      groups.push_back(f.group);
    }
    return free_product(groups);
  }
  if (std::all_of(factors.begin(), factors.end(), [](const OrbitFactor& f) { return f.group.is(Kind::Trivial); }))
    return base;
  const bool all_equal = std::all_of(factors.begin(), factors.end(), [&](const OrbitFactor& f) { return f.group == factors.front().group; });
  if (all_equal && degree(base) == total) return free_wreath(factors.front().group, base);
  if (auto sizes = detail::symq_sizes(base)) {
    std::vector<std::size_t> moving;
    for (const auto& f : factors)
      if (f.orbit_size > 1) moving.push_back(f.orbit_size);
    std::sort(moving.begin(), moving.end());
    if (moving == *sizes) {
      std::vector<QGroupExpr> parts;
      for (const auto& f : factors) parts.push_back(free_wreath(f.group, QGroupExpr::symq(f.orbit_size)));
      return free_product(parts);
    }
  }
  std::sort(factors.begin(), factors.end());
  return QGroupExpr::raw_inhom_free_wreath(factors, base);
}

namespace detail {

// Small groups are stored with every non-identity element as a generator, so equal
// groups (on the same labelling) compare equal.
inline constexpr std::uint64_t kFullListOrder = 1024;

inline ClassicalPermGroup canonical_generators(const ClassicalPermGroup& g) {
  if (g.order > kFullListOrder) return g;
  ClassicalPermGroup out{g.degree, {}, g.order};
  const auto id = identity_permutation(g.degree);
  for (auto& p : g.elements())
    if (p != id) out.generators.push_back(std::move(p));
  return out;
}

}  // namespace detail

inline QGroupExpr normalize(const QGroupExpr& e) {
  switch (e.kind()) {
    case Kind::Trivial: return e;
    case Kind::SymQ: return e.symq_degree() == 1 ? QGroupExpr::trivial() : e;
    case Kind::Classical:
      if (e.group().order == 1) return QGroupExpr::trivial();
      return QGroupExpr::classical(detail::canonical_generators(e.group()));
    case Kind::FreeProduct: {
      std::vector<QGroupExpr> parts;
      for (const auto& f : e.factors()) parts.push_back(normalize(f));
      return free_product(parts);
    }
    case Kind::FreeWreath: return free_wreath(normalize(e.inner()), normalize(e.outer()));
    case Kind::InhomFreeWreath: {
      auto factors = e.orbit_factors();
      for (auto& f : factors) f.group = normalize(f.group);
      return inhom_free_wreath(std::move(factors), normalize(e.base()));
    }
  }
  return e;
}

/// Classicality of a normalised expression: trivial and classical groups are,
/// S^+(n) is for n <= 3, and every free product or (inhomogeneous) free wreath
/// product of nontrivial pieces is not.
inline bool is_classical(const QGroupExpr& e) {
  switch (e.kind()) {
    case Kind::Trivial:
    case Kind::Classical: return true;
    case Kind::SymQ: return e.symq_degree() <= 3;
    case Kind::FreeProduct:
    case Kind::FreeWreath:
    case Kind::InhomFreeWreath: return false;
  }
  return false;
}

inline BigInt factorial(std::size_t n) {
  BigInt out = 1;
  for (std::size_t i = 2; i <= n; ++i) out *= i;
  return out;
}

/// Order of the classical group obtained by replacing each free construction by
/// its classical counterpart.
inline BigInt classical_shadow_order(const QGroupExpr& e) {
  switch (e.kind()) {
    case Kind::Trivial: return 1;
    case Kind::SymQ: return factorial(e.symq_degree());
    case Kind::Classical: return BigInt(e.group().order);
    case Kind::FreeProduct: {
      BigInt out = 1;
      for (const auto& f : e.factors()) out *= classical_shadow_order(f);
      return out;
    }
    case Kind::FreeWreath: {
      auto d = degree(e.outer());
      if (!d) throw BadOuter("free wreath outer factor has no definite degree");
      return boost::multiprecision::pow(classical_shadow_order(e.inner()), static_cast<unsigned>(*d)) *
             classical_shadow_order(e.outer());
    }
    case Kind::InhomFreeWreath: {
      BigInt out = classical_shadow_order(e.base());
      for (const auto& f : e.orbit_factors())
        out *= boost::multiprecision::pow(classical_shadow_order(f.group), static_cast<unsigned>(f.orbit_size));
      return out;
    }
  }
  return 1;
}

inline bool contains_kind(const QGroupExpr& e, Kind k) {
  if (e.is(k)) return true;
  switch (e.kind()) {
    case Kind::FreeProduct:
      return std::any_of(e.factors().begin(), e.factors().end(), [&](const QGroupExpr& f) { return contains_kind(f, k); });
    case Kind::FreeWreath: return contains_kind(e.inner(), k) || contains_kind(e.outer(), k);
    case Kind::InhomFreeWreath: {
      for (const auto& f : e.orbit_factors())
        if (contains_kind(f.group, k)) return true;
      return contains_kind(e.base(), k);
    }
    default: return false;
  }
}

// ---------------------------------------------------------------------------
// Orbits

/// Quantum orbits squeezed between classical orbits and 2-WL vertex classes.
///
/// Classical groups have their automorphism orbits. Otherwise the orbits are
/// determined only when both partitions agree; a strict refinement raises OrbitGap.
inline std::vector<VertexSet> quantum_orbits(const QGroupExpr& e, const std::vector<VertexSet>& aut_orbits,
                                             const std::vector<VertexSet>& wl_classes) {
  auto sorted = [](std::vector<VertexSet> p) {
    for (auto& c : p) std::sort(c.begin(), c.end());
    std::sort(p.begin(), p.end());
    return p;
  };
  auto aut = sorted(aut_orbits);
  if (is_classical(e)) return aut;
  auto wl = sorted(wl_classes);
  if (aut == wl) return aut;
  auto show = [](const std::vector<VertexSet>& p) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < p.size(); ++i) {
      out << (i ? "," : "") << '{';
      for (std::size_t j = 0; j < p[i].size(); ++j) out << (j ? "," : "") << p[i][j];
      out << '}';
    }
    out << '}';
    return out.str();
  };
  throw OrbitGap(show(aut), show(wl));
}

// ---------------------------------------------------------------------------
// Rendering

enum class RenderFormat { text, json, latex };

namespace detail {

inline std::size_t element_order(const Permutation& p) {
  Permutation cur = p;
  const Permutation id = identity_permutation(static_cast<int>(p.size()));
  std::size_t k = 1;
  while (cur != id) {
    cur = compose(cur, p);
    ++k;
  }
  return k;
}

struct CatalogName {
  char family;  // 'Z', 'D', 'S' or 0
  std::uint64_t index;
};

/// Recognises cyclic, dihedral and symmetric groups of small degree.
inline CatalogName catalog_name(const ClassicalPermGroup& g) {
  if (g.degree > 12 || g.order > 50000) return {0, g.order};
  const auto elems = g.elements();
  const std::uint64_t n = g.order;
  for (const auto& p : elems)
    if (element_order(p) == n) return {'Z', n};
  if (n % 2 == 0 && n >= 4) {
    const std::uint64_t m = n / 2;
    for (const auto& r : elems) {
      if (element_order(r) != m) continue;
      std::set<Permutation> rotations;
      Permutation cur = identity_permutation(g.degree);
      for (std::uint64_t i = 0; i < m; ++i) {
        rotations.insert(cur);
        cur = compose(cur, r);
      }
      Permutation r_inv = identity_permutation(g.degree);
      for (int x = 0; x < g.degree; ++x) r_inv[r[x]] = x;
      for (const auto& s : elems) {
        if (rotations.count(s) || element_order(s) != 2) continue;
        if (compose(compose(s, r), s) == r_inv) return {'D', m};
      }
    }
  }
  VertexSet all(g.degree);
  std::iota(all.begin(), all.end(), 0);
  for (const auto& orbit : orbits(g, all)) {
    if (factorial(orbit.size()) != BigInt(n)) continue;
    std::set<std::vector<Vertex>> restricted;
    for (const auto& p : elems) {
      std::vector<Vertex> r;
      for (Vertex v : orbit) r.push_back(p[v]);
      restricted.insert(r);
    }
    if (restricted.size() == n) return {'S', orbit.size()};
  }
  return {0, n};
}

inline bool compound(const QGroupExpr& e) {
  return e.is(Kind::FreeProduct) || e.is(Kind::FreeWreath) || e.is(Kind::InhomFreeWreath);
}

inline std::string render_text(const QGroupExpr& e, bool wrap) {
  std::string out;
  switch (e.kind()) {
    case Kind::Trivial: return "1";
    case Kind::SymQ: return "S^+(" + std::to_string(e.symq_degree()) + ")";
    case Kind::Classical: {
      auto name = catalog_name(e.group());
      if (name.family) return std::string(1, name.family) + "_" + std::to_string(name.index);
      return "Grp(order=" + std::to_string(e.group().order) + ")";
    }
    case Kind::FreeProduct:
      for (std::size_t i = 0; i < e.factors().size(); ++i) out += (i ? " * " : "") + render_text(e.factors()[i], true);
      break;
    case Kind::FreeWreath: out = render_text(e.inner(), true) + " wr* " + render_text(e.outer(), true); break;
    case Kind::InhomFreeWreath: {
      out = "(";
      auto fs = e.orbit_factors();
      for (std::size_t i = 0; i < fs.size(); ++i) out += (i ? "," : "") + render_text(fs[i].group, true);
      out += ") wrwr* " + render_text(e.base(), true);
      break;
    }
  }
  return wrap ? "(" + out + ")" : out;
}

inline std::string render_latex(const QGroupExpr& e, bool wrap) {
  std::string out;
  switch (e.kind()) {
    case Kind::Trivial: return "1";
    case Kind::SymQ: return "S_{" + std::to_string(e.symq_degree()) + "}^{+}";
    case Kind::Classical: {
      auto name = catalog_name(e.group());
      switch (name.family) {
        case 'Z': return "\\mathbb{Z}_{" + std::to_string(name.index) + "}";
        case 'D': return "D_{" + std::to_string(name.index) + "}";
        case 'S': return "S_{" + std::to_string(name.index) + "}";
        default: return "\\Gamma_{" + std::to_string(name.index) + "}";
      }
    }
    case Kind::FreeProduct:
      for (std::size_t i = 0; i < e.factors().size(); ++i) out += (i ? " \\ast " : "") + render_latex(e.factors()[i], true);
      break;
    case Kind::FreeWreath: out = render_latex(e.inner(), true) + " \\wr_{*} " + render_latex(e.outer(), true); break;
    case Kind::InhomFreeWreath: {
      out = "(";
      auto fs = e.orbit_factors();
      for (std::size_t i = 0; i < fs.size(); ++i) out += (i ? ", " : "") + render_latex(fs[i].group, false);
      out += ") \\mathbin{\\wr\\wr_{*}} " + render_latex(e.base(), true);
      break;
    }
  }
  return wrap ? "\\left(" + out + "\\right)" : out;
}

}  // namespace detail

inline nlohmann::json to_json(const QGroupExpr& e) {
  using nlohmann::json;
  switch (e.kind()) {
    case Kind::Trivial: return json{{"t", "trivial"}};
    case Kind::SymQ: return json{{"t", "symq"}, {"n", e.symq_degree()}};
    case Kind::Classical:
      return json{{"t", "classical"}, {"degree", e.group().degree}, {"order", e.group().order}, {"gens", e.group().generators}};
    case Kind::FreeProduct: {
      json fs = json::array();
      for (const auto& f : e.factors()) fs.push_back(to_json(f));
      return json{{"t", "freeprod"}, {"factors", fs}};
    }
    case Kind::FreeWreath: return json{{"t", "freewreath"}, {"inner", to_json(e.inner())}, {"outer", to_json(e.outer())}};
    case Kind::InhomFreeWreath: {
      json fs = json::array();
      for (const auto& f : e.orbit_factors()) fs.push_back(json{{"g", to_json(f.group)}, {"k", f.orbit_size}});
      return json{{"t", "inhomwreath"}, {"factors", fs}, {"base", to_json(e.base())}};
    }
  }
  return {};
}

/// Inverse of to_json; builds raw nodes exactly as written.
inline QGroupExpr from_json(const nlohmann::json& j) {
  const std::string t = j.at("t").get<std::string>();
  if (t == "trivial") return QGroupExpr::trivial();
  if (t == "symq") return QGroupExpr::symq(j.at("n").get<std::size_t>());
  if (t == "classical") {
    ClassicalPermGroup g;
    g.degree = j.at("degree").get<int>();
    g.order = j.at("order").get<std::uint64_t>();
    g.generators = j.at("gens").get<std::vector<Permutation>>();
    for (const auto& p : g.generators)
      if (static_cast<int>(p.size()) != g.degree) throw std::invalid_argument("generator length differs from degree");
    return QGroupExpr::classical(std::move(g));
  }
  if (t == "freeprod") {
    std::vector<QGroupExpr> fs;
    for (const auto& f : j.at("factors")) fs.push_back(from_json(f));
    return QGroupExpr::raw_free_product(std::move(fs));
  }
  if (t == "freewreath") return QGroupExpr::raw_free_wreath(from_json(j.at("inner")), from_json(j.at("outer")));
  if (t == "inhomwreath") {
    std::vector<OrbitFactor> fs;
    for (const auto& f : j.at("factors")) fs.push_back({from_json(f.at("g")), f.at("k").get<std::size_t>()});
    return QGroupExpr::raw_inhom_free_wreath(fs, from_json(j.at("base")));
  }
  throw std::invalid_argument("unknown expression tag '" + t + "'");
}

inline std::string render(const QGroupExpr& e, RenderFormat fmt) {
  switch (fmt) {
    case RenderFormat::text: return detail::render_text(e, false);
    case RenderFormat::latex: return detail::render_latex(e, false);
    case RenderFormat::json: return to_json(e).dump();
  }
  return {};
}

inline std::ostream& operator<<(std::ostream& out, const QGroupExpr& e) { return out << render(e, RenderFormat::text); }

}  // namespace qblock
