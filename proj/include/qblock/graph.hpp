#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qblock/errors.hpp"

namespace qblock {

using Vertex = int;
using Color = std::uint64_t;

/// Sorted list of distinct vertex ids.
using VertexSet = std::vector<Vertex>;

inline VertexSet make_vertex_set(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with a total vertex colouring.
///
/// Adjacency is kept both as a dense matrix (constant-time queries for WL and the
/// brute-force searches) and as sorted neighbour lists.
class ColoredGraph {
 public:
  ColoredGraph() = default;

  explicit ColoredGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0), nbrs_(n), colors_(n, 0) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
  }

  ColoredGraph(int n, const std::vector<Edge>& edges, std::vector<Color> colors = {}) : ColoredGraph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
    if (!colors.empty()) {
      if (static_cast<int>(colors.size()) != n) throw std::invalid_argument("colour vector size mismatch");
      colors_ = std::move(colors);
    }
  }

  int n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }

  bool adjacent(Vertex u, Vertex v) const { return adj_[index(u, v)] != 0; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return nbrs_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(nbrs_.at(v).size()); }

  Color color(Vertex v) const { return colors_.at(v); }
  const std::vector<Color>& colors() const noexcept { return colors_; }
  void set_color(Vertex v, Color c) {
    check_vertex(v);
    colors_[v] = c;
  }

  /// Throws SelfLoop / DuplicateEdge (line 0) on violations of simplicity.
  void add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw SelfLoop(0, "self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) {
      throw DuplicateEdge(0, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    adj_[index(u, v)] = adj_[index(v, u)] = 1;
    insert_sorted(nbrs_[u], v);
    insert_sorted(nbrs_[v], u);
    ++m_;
  }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : nbrs_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_ && a.colors_ == b.colors_;
  }

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }
  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw UnknownVertex("vertex " + std::to_string(v) + " out of range");
  }
  static void insert_sorted(std::vector<Vertex>& vs, Vertex v) { vs.insert(std::upper_bound(vs.begin(), vs.end(), v), v); }

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::vector<Color> colors_;
};

// ---------------------------------------------------------------------------
// Parsing and rendering

enum class GraphFormat { edgelist, graph6 };

namespace detail {

inline std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline long long parse_int(const std::string& tok, std::size_t line) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
  }
  try {
    return std::stoll(tok);
  } catch (const std::out_of_range&) {
    throw ParseError(line, "integer out of range: " + tok);
  }
}

inline ColoredGraph parse_edgelist(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  long long expected_m = 0;
  std::size_t seen_m = 0;
  ColoredGraph g;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (line.empty()) continue;
    auto toks = split_ws(line);
    if (!have_header) {
      if (toks.size() != 2) throw ParseError(line_no, "header must be 'n m'");
      long long n = parse_int(toks[0], line_no);
      expected_m = parse_int(toks[1], line_no);
      if (n > 100000) throw ParseError(line_no, "vertex count too large");
      if (expected_m > n * (n - 1) / 2) throw ParseError(line_no, "more edges than a simple graph allows");
      g = ColoredGraph(static_cast<int>(n));
      have_header = true;
      continue;
    }
    if (toks[0] == "c") {
      if (toks.size() != 3) throw ParseError(line_no, "colour line must be 'c v k'");
      long long v = parse_int(toks[1], line_no);
      long long k = parse_int(toks[2], line_no);
      if (v >= g.n()) throw ParseError(line_no, "colour for unknown vertex " + toks[1]);
      g.set_color(static_cast<Vertex>(v), static_cast<Color>(k));
      continue;
    }
    if (toks.size() != 2) throw ParseError(line_no, "edge line must be 'u v'");
    long long u = parse_int(toks[0], line_no);
    long long v = parse_int(toks[1], line_no);
    if (u >= g.n() || v >= g.n()) throw ParseError(line_no, "edge endpoint out of range");
    if (u == v) throw SelfLoop(line_no, "self-loop at vertex " + toks[0]);
    if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
      throw DuplicateEdge(line_no, "duplicate edge " + toks[0] + " " + toks[1]);
    }
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    ++seen_m;
  }
  if (!have_header) throw ParseError(line_no, "missing 'n m' header");
  if (static_cast<long long>(seen_m) != expected_m) {
    throw ParseError(line_no, "header announces " + std::to_string(expected_m) + " edges, found " +
                                  std::to_string(seen_m));
  }
  return g;
}

inline ColoredGraph parse_graph6(std::string_view text) {
  std::string s = trim(text);
  if (auto nl = s.find('\n'); nl != std::string::npos) s = trim(s.substr(0, nl));
  constexpr std::string_view header = ">>graph6<<";
  if (s.rfind(header, 0) == 0) s = s.substr(header.size());
  for (unsigned char ch : s) {
    if (ch < 63 || ch > 126) throw ParseError(1, "invalid graph6 character");
  }
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= s.size()) throw ParseError(1, "truncated graph6 string");
    return static_cast<unsigned char>(s[pos++]) - 63;
  };
  long long n = 0;
  int first = next();
  if (first < 63) {
    n = first;
  } else {
    int second = next();
    int words = 3;
    if (second == 63) {
      words = 6;
    } else {
      n = second;
      words = 2;
    }
    for (int i = 0; i < words; ++i) n = (n << 6) | next();
  }
  if (n > 100000) throw ParseError(1, "vertex count too large");
  ColoredGraph g(static_cast<int>(n));
  int bits_left = 0;
  int word = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (bits_left == 0) {
        word = next();
        bits_left = 6;
      }
      --bits_left;
      if ((word >> bits_left) & 1) g.add_edge(i, j);
    }
  }
  if (pos != s.size()) throw ParseError(1, "trailing characters in graph6 string");
  return g;
}

}  // namespace detail

inline ColoredGraph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::edgelist ? detail::parse_edgelist(text) : detail::parse_graph6(text);
}

inline std::string render_edgelist(const ColoredGraph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.color(v) != 0) out << "c " << v << ' ' << g.color(v) << '\n';
  return out.str();
}

/// Colours are dropped: graph6 has no colour channel.
inline std::string render_graph6(const ColoredGraph& g) {
  std::string out;
  const long long n = g.n();
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n < 258048) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int word = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + 63));
        word = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + 63));
  return out;
}

// ---------------------------------------------------------------------------
// Elementary operations

inline ColoredGraph complement(const ColoredGraph& g) {
  ColoredGraph out(g.n());
  for (Vertex u = 0; u < g.n(); ++u) {
    out.set_color(u, g.color(u));
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  }
  return out;
}

struct InducedSubgraph {
  ColoredGraph graph;
  /// to_original[i] is the vertex of the parent graph relabelled to i.
  std::vector<Vertex> to_original;
};

inline InducedSubgraph induced_subgraph(const ColoredGraph& g, const VertexSet& s) {
  std::vector<int> local(g.n(), -1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    Vertex v = s[i];
    if (v < 0 || v >= g.n()) throw UnknownVertex("vertex " + std::to_string(v) + " not in graph");
    if (i > 0 && s[i - 1] >= v) throw std::invalid_argument("vertex set must be sorted and distinct");
    local[v] = static_cast<int>(i);
  }
  InducedSubgraph out{ColoredGraph(static_cast<int>(s.size())), s};
  for (std::size_t i = 0; i < s.size(); ++i) {
    out.graph.set_color(static_cast<Vertex>(i), g.color(s[i]));
    for (Vertex w : g.neighbors(s[i]))
      if (local[w] > static_cast<int>(i)) out.graph.add_edge(static_cast<Vertex>(i), local[w]);
  }
  return out;
}

/// Components as sorted vertex sets, ordered by smallest member.
inline std::vector<VertexSet> connected_components(const ColoredGraph& g) {
  std::vector<int> seen(g.n(), 0);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const ColoredGraph& g) { return g.n() <= 1 || connected_components(g).size() == 1; }

/// Applies a vertex permutation: vertex v of g becomes perm[v].
inline ColoredGraph relabel(const ColoredGraph& g, const std::vector<Vertex>& perm) {
  ColoredGraph out(g.n());
  for (Vertex v = 0; v < g.n(); ++v) out.set_color(perm.at(v), g.color(v));
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

}  // namespace qblock
