#pragma once

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qblock/blocks.hpp"
#include "qblock/classrec.hpp"
#include "qblock/engine.hpp"
#include "qblock/enumerate.hpp"
#include "qblock/graph.hpp"
#include "qblock/qexpr.hpp"
#include "qblock/wl.hpp"

namespace qblock::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kRefused = 3,
  kOrbitGap = 4,
  kShadowMismatch = 5,
};

inline constexpr int kCheckAutLimit = 12;

/// Unlabeled trees on 1..9 vertices.
inline constexpr int kFreeTreeCounts[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47};

struct RunReport {
  std::string input;
  GraphClass graph_class = GraphClass::Forest;
  std::string text, json, latex;
  std::vector<std::string> assumptions;
  std::optional<bool> shadow_ok;
  double seconds = 0;
};

namespace detail {

inline GraphFormat pick_format(const std::string& path, const std::string& flag) {
  if (flag == "graph6") return GraphFormat::graph6;
  if (flag == "edgelist") return GraphFormat::edgelist;
  const bool g6 = path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0;
  return g6 ? GraphFormat::graph6 : GraphFormat::edgelist;
}

inline ColoredGraph load(const std::string& path, const std::string& format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_graph(text.str(), pick_format(path, format));
}

inline std::string dot(const ColoredGraph& g) {
  const auto t = block_tree(g);
  std::ostringstream out;
  out << "graph blocktree {\n";
  for (int b = 0; b < static_cast<int>(t.blocks().size()); ++b) {
    out << "  B" << b << " [shape=box, label=\"{";
    for (std::size_t i = 0; i < t.blocks()[b].size(); ++i) out << (i ? "," : "") << t.blocks()[b][i];
    out << "}\"" << (t.center() == TreeNode::block(b) ? ", peripheries=2" : "") << "];\n";
  }
  for (Vertex v : t.cuts())
    out << "  v" << v << " [shape=circle, label=\"" << v << "\"" << (t.center() == TreeNode::cut(v) ? ", peripheries=2" : "")
        << "];\n";
  for (auto [b, v] : t.tree_edges()) out << "  B" << b << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

inline std::string block_listing(const ColoredGraph& g) {
  const auto t = block_tree(g);
  std::ostringstream out;
  out << "center " << to_string(t.center()) << '\n';
  for (int b = 0; b < static_cast<int>(t.blocks().size()); ++b) {
    out << "B" << b << " level " << t.level(TreeNode::block(b)) << " {";
    for (std::size_t i = 0; i < t.blocks()[b].size(); ++i) out << (i ? "," : "") << t.blocks()[b][i];
    out << "}\n";
  }
  for (Vertex v : t.cuts()) out << "v" << v << " level " << t.level(TreeNode::cut(v)) << '\n';
  return out.str();
}

inline std::string wl_report(const ColoredGraph& g) {
  const auto c = stable_coloring(g);
  std::ostringstream out;
  out << "classes " << c.num_classes() << '\n';
  for (Vertex x = 0; x < g.n(); ++x) {
    for (Vertex y = 0; y < g.n(); ++y) out << (y ? "," : "") << c.color(x, y);
    out << '\n';
  }
  return out.str();
}

// Exhaustive tree sweep: shadow order against the automorphism count, and no
// inhomogeneous wreath products.
inline int selftest(int max_n, std::ostream& out, std::ostream& err) {
  int failures = 0;
  std::size_t total = 0;
  for (int n = 1; n <= max_n; ++n) {
    const auto trees = free_trees(n);
    if (n < static_cast<int>(std::size(kFreeTreeCounts)) && static_cast<int>(trees.size()) != kFreeTreeCounts[n]) {
      err << "n=" << n << ": enumerated " << trees.size() << " trees, expected " << kFreeTreeCounts[n] << '\n';
      ++failures;
    }
    for (const auto& g : trees) {
      const auto r = qut(g);
      const auto shadow = classical_shadow_order(r.expr);
      const auto aut = automorphism_group(g).order;
      if (shadow != BigInt(aut) || contains_kind(r.expr, Kind::InhomFreeWreath)) {
        err << "tree " << render_graph6(g) << ": " << r.expr << " shadow " << shadow << " |Aut| " << aut << '\n';
        ++failures;
      }
    }
    total += trees.size();
  }
  out << "selftest: " << total << " trees, " << failures << " failures\n";
  return failures ? kShadowMismatch : kOk;
}

}  // namespace detail

/// Runs one command; args exclude the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum automorphism groups of forests, outerplanar graphs and block graphs", "qblock"};
  app.require_subcommand(1);
  std::string file, format = "auto";
  bool json = false, latex = false, force = false, check_aut = false, dot = false;
  int jobs = 1, max_n = 8;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("file", file, "graph file (edge list or graph6)")->required();
    sub->add_option("--format", format, "input format")->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
  };
  auto* qut_cmd = app.add_subcommand("qut", "print the quantum automorphism group");
  add_input(qut_cmd);
  auto* json_flag = qut_cmd->add_flag("--json", json, "JSON output");
  qut_cmd->add_flag("--latex", latex, "LaTeX output")->excludes(json_flag);
  qut_cmd->add_flag("--force", force, "run on unsupported graph classes");
  qut_cmd->add_flag("--check-aut", check_aut, "compare the classical shadow with |Aut|");
  qut_cmd->add_option("--jobs", jobs, "parallel tasks")->check(CLI::PositiveNumber);
  auto* classify_cmd = app.add_subcommand("classify", "print the graph class");
  add_input(classify_cmd);
  auto* tree_cmd = app.add_subcommand("blocktree", "print the block tree");
  add_input(tree_cmd);
  tree_cmd->add_flag("--dot", dot, "Graphviz output");
  auto* wl_cmd = app.add_subcommand("wl", "print the stable 2-WL colouring");
  add_input(wl_cmd);
  auto* self_cmd = app.add_subcommand("selftest", "exhaustive check over small trees");
  self_cmd->add_option("--max-n", max_n, "largest tree size")->check(CLI::Range(1, 12));

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "qblock: " << e.what() << '\n';
    return kFailure;
  }

  try {
    if (self_cmd->parsed()) return detail::selftest(max_n, out, err);
    const ColoredGraph g = detail::load(file, format);
    if (classify_cmd->parsed()) {
      const auto cls = classify(g);
      out << to_string(cls) << '\n';
      return cls == GraphClass::Unsupported ? kRefused : kOk;
    }
    if (tree_cmd->parsed()) {
      out << (dot ? detail::dot(g) : detail::block_listing(g));
      return kOk;
    }
    if (wl_cmd->parsed()) {
      out << detail::wl_report(g);
      return kOk;
    }

    const auto start = std::chrono::steady_clock::now();
    EngineOptions opt;
    opt.force = force;
    opt.jobs = jobs;
    const auto result = qut(g, opt);
    RunReport report;
    report.input = file;
    report.graph_class = result.graph_class;
    report.assumptions = result.assumptions;
    report.text = render(result.expr, RenderFormat::text);
    report.json = render(result.expr, RenderFormat::json);
    report.latex = render(result.expr, RenderFormat::latex);
    if (check_aut) {
      if (g.n() > kCheckAutLimit) {
        err << "qblock: --check-aut skipped, graph has more than " << kCheckAutLimit << " vertices\n";
      } else {
        const auto shadow = classical_shadow_order(result.expr);
        const auto aut = automorphism_group(g).order;
        report.shadow_ok = shadow == BigInt(aut);
        err << "shadow order " << shadow << ", |Aut| " << aut << (*report.shadow_ok ? "" : " MISMATCH") << '\n';
      }
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (const auto& a : report.assumptions) err << "assumption: " << a << '\n';
    out << (json ? report.json : latex ? report.latex : report.text) << '\n';
    if (report.shadow_ok == false) return kShadowMismatch;
    return kOk;
  } catch (const ParseError& e) {
    err << "qblock: parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const ClassRefused& e) {
    err << "qblock: " << e.what() << " (use --force)\n";
    return kRefused;
  } catch (const UnsupportedBlock& e) {
    err << "qblock: " << e.what() << '\n';
    return kRefused;
  } catch (const UnsupportedClass& e) {
    err << "qblock: " << e.what() << '\n';
    return kRefused;
  } catch (const OrbitGap& e) {
    err << "qblock: " << e.what() << '\n';
    return kOrbitGap;
  } catch (const std::exception& e) {
    err << "qblock: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace qblock::cli
