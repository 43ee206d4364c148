// treesym: symmetry invariants and distinguishing 2-colorings of trees.
//
// Exit codes: 0 success, 1 internal error, 2 bad input or usage,
// 3 no such distinguishing coloring, 4 coloring is not distinguishing,
// 5 theorem violation found by `corpus --check`.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "treesym/report.hpp"

namespace {

using namespace treesym;

constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitNoColoring = 3;
constexpr int kExitNotDistinguishing = 4;
constexpr int kExitViolation = 5;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

BigNat parse_index(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError("index must be a non-negative decimal integer");
  return BigNat(text);
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_analyze(const std::string& file, bool as_json, const std::vector<Vertex>& roots, bool all_roots) {
  Tree t = parse_edge_list(read_input(file));
  std::vector<Vertex> chosen = roots;
  if (all_roots) {
    chosen.clear();
    for (Vertex v = 0; v < t.size(); ++v) chosen.push_back(v);
  }
  for (Vertex w : chosen)
    if (w >= t.size()) throw UsageError("root " + std::to_string(w) + " out of range");
  Session session;
  AnalysisReport r = analyze(t, chosen, session);
  if (as_json) {
    print_json(to_json(r));
    return 0;
  }
  auto row = [](const std::string& k, const std::string& v) {
    std::cout << std::left << std::setw(17) << k << v << "\n";
  };
  row("n", std::to_string(r.n));
  row("max degree", std::to_string(r.max_degree));
  row("center", r.center.is_vertex() ? "vertex " + std::to_string(r.center.first)
                                     : "edge " + std::to_string(r.center.first) + " " +
                                           std::to_string(r.center.second));
  row("motion", r.motion.to_string());
  row("|Aut(T)|", to_decimal(r.aut_order));
  row("a(T)", to_decimal(r.asym));
  row("distinguishable", r.distinguishable ? "yes" : "no");
  row("degree bound", r.degree_bound ? "holds" : "fails");
  if (r.cameron)
    row("|Aut| * a", to_decimal(r.cameron->product) + (r.cameron->holds ? " <= " : " > ") + "2^" +
                         std::to_string(r.n));
  for (const auto& [w, a] : r.rooted) row("a(T, " + std::to_string(w) + ")", to_decimal(a));
  for (const auto& note : r.notes) row("note", note);
  return 0;
}

int run_color(const std::string& file, const std::string& index_text, std::optional<Vertex> root,
              std::size_t count, bool dot) {
  Tree t = parse_edge_list(read_input(file));
  if (root && *root >= t.size()) throw UsageError("root out of range");
  const BigNat first = parse_index(index_text);
  Session session;
  std::optional<RootedTree> rt;
  BigNat total;
  if (root) {
    rt.emplace(t, *root);
    total = asym_rooted(*rt, session);
  } else {
    total = asym_unrooted(t, session);
  }
  if (total == 0) {
    std::cerr << "tree is not 2-distinguishable" << (root ? " as a rooted tree" : "") << "\n";
    return kExitNoColoring;
  }
  if (count == 0 || first + count > total) {
    std::cerr << "index range exceeds the " << to_decimal(total)
              << " inequivalent distinguishing colorings\n";
    return kExitNoColoring;
  }
  for (std::size_t i = 0; i < count; ++i) {
    const BigNat k = first + i;
    Coloring c = rt ? unrank_distinguishing(*rt, k, session) : unrank_unrooted(t, k, session);
    if (dot)
      std::cout << to_dot(t, c);
    else
      std::cout << c.bits() << "\n";
  }
  return 0;
}

int run_verify(const std::string& file, const std::string& bits, std::optional<Vertex> pin) {
  Tree t = parse_edge_list(read_input(file));
  Coloring c = Coloring::from_bits(bits);
  if (c.size() != t.size())
    throw UsageError("coloring has " + std::to_string(c.size()) + " entries, tree has " +
                     std::to_string(t.size()) + " vertices");
  if (pin && *pin >= t.size()) throw UsageError("pinned vertex out of range");
  const bool ok = verify_distinguishing(t, c, pin);
  std::cout << (ok ? "true" : "false") << "\n";
  return ok ? 0 : kExitNotDistinguishing;
}

int run_oracle(const std::string& file, std::optional<Vertex> root, bool as_json) {
  Tree t = parse_edge_list(read_input(file));
  if (t.size() > kOracleMaxVertices)
    throw UsageError("oracle enumerates 2^n subsets; n must be at most " +
                     std::to_string(kOracleMaxVertices));
  if (root && *root >= t.size()) throw UsageError("root out of range");
  OrbitReport r = brute_asym(t, root);
  json j = to_json(r);
  j["motion"] = motion_json(brute_motion(t));
  if (as_json) {
    print_json(j);
  } else {
    std::cout << "colorings        " << to_decimal(r.total_colorings) << "\n"
              << "distinguishing   " << to_decimal(r.distinguishing_count) << "\n"
              << "orbits (a)       " << to_decimal(r.orbit_count) << "\n"
              << "automorphisms    " << to_decimal(r.aut_order) << "\n"
              << "regular action   " << (r.regular_action_holds() ? "yes" : "NO") << "\n"
              << "motion           " << j["motion"].dump() << "\n";
  }
  return r.regular_action_holds() ? 0 : kExitInternal;
}

int run_corpus(CorpusSpec spec, bool check, bool as_json) {
  auto trees = generate(spec);
  if (!check) {
    if (as_json) {
      json list = json::array();
      for (const auto& t : trees) list.push_back({{"n", t.size()}, {"edges", edges_json(t.edges())}});
      print_json({{"schema", kSchemaVersion}, {"family", family_name(spec.family)}, {"trees", list}});
    } else {
      for (std::size_t i = 0; i < trees.size(); ++i)
        std::cout << (i ? "\n" : "") << to_edge_list(trees[i]);
    }
    return 0;
  }
  Session session;
  SuiteReport suite = run_theorem_suite(trees, session);
  json conjecture = json::array();
  std::size_t inconsistent = 0;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    ConjectureResult c = conjecture_check(trees[i], session);
    if (!c.consistent()) {
      ++inconsistent;
      json entry = to_json(c);
      entry["index"] = i;
      entry["edges"] = edges_json(trees[i].edges());
      conjecture.push_back(entry);
    }
  }
  if (as_json) {
    print_json({{"schema", kSchemaVersion},
                {"family", family_name(spec.family)},
                {"suite", to_json(suite)},
                {"conjecture", {{"checked", trees.size()}, {"counterexamples", conjecture}}}});
  } else {
    std::cout << std::left << std::setw(7) << "index" << std::setw(5) << "n" << std::setw(5) << "deg"
              << std::setw(12) << "motion" << std::setw(22) << "|Aut|" << std::setw(22) << "a(T)"
              << "checks\n";
    for (const auto& r : suite.records) {
      std::cout << std::setw(7) << r.index << std::setw(5) << r.n << std::setw(5) << r.max_degree
                << std::setw(12) << r.motion.to_string() << std::setw(22) << to_decimal(r.aut_order)
                << std::setw(22) << to_decimal(r.asym) << outcome_name(r.distinguishable) << " / "
                << outcome_name(r.rooted_bound) << " / " << outcome_name(r.cameron) << "\n";
    }
    std::cout << "\ntrees " << suite.trees << ", passed " << suite.passed << ", failed " << suite.failed
              << ", hypothesis not met " << suite.not_applicable << ", conjecture inconsistencies "
              << inconsistent << "\n";
  }
  return suite.clean() ? 0 : kExitViolation;
}

int run_treelike(const std::string& file, Vertex root, bool as_json) {
  Graph g = parse_graph_edge_list(read_input(file));
  if (root >= g.size()) throw UsageError("root out of range");
  if (g.size() > kOracleMaxVertices)
    throw UsageError("treelike verifies by brute force; n must be at most " +
                     std::to_string(kOracleMaxVertices));
  RootedGraph rg(g, root);
  TreelikeReport report = is_treelike(rg);
  TreelikeColoring coloring = treelike_distinguish(rg);
  json j = to_json(rg, report, coloring);
  if (as_json) {
    print_json(j);
    return 0;
  }
  std::cout << "tree-like            " << (report.all_vertices ? "yes" : "no") << "\n"
            << "tree-like (root exempt) " << (report.all_but_root ? "yes" : "no") << "\n"
            << "forest edges         " << j["forest_edges"].dump() << "\n"
            << "component sizes      " << j["component_sizes"].dump() << "\n"
            << "coloring             " << (coloring.coloring ? coloring.coloring->bits() : "none") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry invariants and distinguishing 2-colorings of finite trees"};
  app.require_subcommand(1);

  std::string file = "-";
  bool as_json = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "automorphism order, motion, asymmetrizing number");
  std::vector<Vertex> roots;
  bool all_roots = false;
  analyze_cmd->add_option("file", file, "edge-list file, or - for standard input");
  analyze_cmd->add_flag("--json", as_json, "machine-readable output");
  analyze_cmd->add_option("--root", roots, "also report a(T, w) for this root (repeatable)");
  analyze_cmd->add_flag("--all-roots", all_roots, "report a(T, w) for every vertex w");

  auto* color_cmd = app.add_subcommand("color", "print inequivalent distinguishing colorings");
  std::string index_text = "0";
  std::optional<Vertex> color_root;
  std::size_t count = 1;
  bool dot = false;
  color_cmd->add_option("file", file, "edge-list file, or - for standard input");
  color_cmd->add_option("--index", index_text, "first coloring index");
  color_cmd->add_option("--root", color_root, "rank colorings of the rooted tree (T, w)");
  color_cmd->add_option("--count", count, "number of consecutive indices");
  color_cmd->add_flag("--dot", dot, "Graphviz output instead of 0/1 strings");

  auto* verify_cmd = app.add_subcommand("verify", "check that a coloring is distinguishing");
  std::string bits;
  std::optional<Vertex> pin;
  verify_cmd->add_option("file", file, "edge-list file, or - for standard input");
  verify_cmd->add_option("--coloring", bits, "0/1 string in vertex order (1 = black)")->required();
  verify_cmd->add_option("--pin", pin, "only consider automorphisms fixing this vertex");

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force orbit counts (n <= 16)");
  std::optional<Vertex> oracle_root;
  oracle_cmd->add_option("file", file, "edge-list file, or - for standard input");
  oracle_cmd->add_option("--root", oracle_root, "count under the stabilizer of this vertex");
  oracle_cmd->add_flag("--json", as_json, "machine-readable output");

  auto* corpus_cmd = app.add_subcommand("corpus", "generate tree families and run the theorem suite");
  CorpusSpec spec;
  std::string family = "random-prufer";
  std::optional<std::size_t> all_trees_n;
  bool check = false;
  corpus_cmd->add_option("--family", family,
                         "random-prufer | all-trees | kary | caterpillar | lobed-extremal | spider");
  corpus_cmd->add_option("--n", spec.n, "vertex count, spine length or leg length");
  corpus_cmd->add_option("--arity", spec.arity, "children per vertex, legs per spine vertex, or spider legs");
  corpus_cmd->add_option("--m", spec.m, "motion parameter of lobed-extremal");
  corpus_cmd->add_option("--count", spec.count, "number of random trees");
  corpus_cmd->add_option("--seed", spec.seed, "random seed");
  corpus_cmd->add_option("--all-trees", all_trees_n, "shorthand for --family all-trees --n N");
  corpus_cmd->add_flag("--check", check, "run the theorem suite and conjecture check");
  corpus_cmd->add_flag("--json", as_json, "machine-readable output");

  auto* treelike_cmd = app.add_subcommand("treelike", "tree-like test and forest construction for a rooted graph");
  Vertex treelike_root = 0;
  treelike_cmd->add_option("file", file, "graph edge-list file, or - for standard input");
  treelike_cmd->add_option("--root", treelike_root, "root vertex")->required();
  treelike_cmd->add_flag("--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*analyze_cmd) return run_analyze(file, as_json, roots, all_roots);
    if (*color_cmd) return run_color(file, index_text, color_root, count, dot);
    if (*verify_cmd) return run_verify(file, bits, pin);
    if (*oracle_cmd) return run_oracle(file, oracle_root, as_json);
    if (*corpus_cmd) {
      spec.family = parse_family(family);
      if (all_trees_n) {
        spec.family = Family::all_trees;
        spec.n = *all_trees_n;
      }
      try {
        spec.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      return run_corpus(spec, check, as_json);
    }
    if (*treelike_cmd) return run_treelike(file, treelike_root, as_json);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
