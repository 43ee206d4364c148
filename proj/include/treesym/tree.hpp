#pragma once

// Finite trees and simple graphs on dense vertex ids 0..n-1, the edge-list
// text format, centers, rootings and 2-colorings.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <istream>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace treesym {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/// Malformed or structurally invalid input. `line()` is 1-based, or 0 when
/// the problem is not tied to a particular input line.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& message, std::size_t line = 0)
      : std::runtime_error(line == 0 ? message
                                     : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
  }
  Vertex find(Vertex v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<Vertex> parent_;
};

struct NumberedEdge {
  Edge edge;
  std::size_t line;
};

inline bool is_connected(const std::vector<std::vector<Vertex>>& adj) {
  std::vector<char> seen(adj.size(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : adj[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == adj.size();
}

// Validates ids, self-loops and duplicates; when `forbid_cycles` is set,
// also rejects the first edge closing a cycle. Returns sorted adjacency.
inline std::vector<std::vector<Vertex>> build_adjacency(std::size_t n,
                                                        const std::vector<NumberedEdge>& edges,
                                                        bool forbid_cycles) {
  if (n == 0) throw InputError("vertex count must be positive");
  std::vector<std::vector<Vertex>> adj(n);
  std::set<Edge> seen;
  DisjointSets sets(n);
  for (const auto& [edge, line] : edges) {
    auto [u, v] = edge;
    if (u >= n || v >= n)
      throw InputError("vertex id out of range (n = " + std::to_string(n) + ")", line);
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u), line);
    Edge key{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second)
      throw InputError("duplicate edge " + std::to_string(key.first) + " " +
                           std::to_string(key.second),
                       line);
    if (!sets.unite(u, v) && forbid_cycles)
      throw InputError("edge " + std::to_string(u) + " " + std::to_string(v) + " closes a cycle",
                       line);
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

struct ParsedEdgeList {
  std::size_t n = 0;
  std::vector<NumberedEdge> edges;
  std::size_t last_line = 0;
};

inline ParsedEdgeList read_edge_list(std::istream& in) {
  ParsedEdgeList out;
  std::string line;
  std::size_t line_no = 0;
  bool have_n = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string extra;
    if (!have_n) {
      long long n = 0;
      if (!(fields >> n)) {
        if (line.find_first_not_of(" \t") == std::string::npos)
          throw InputError("first line must hold the vertex count", line_no);
        throw InputError("cannot parse vertex count", line_no);
      }
      if (fields >> extra) throw InputError("unexpected text after vertex count", line_no);
      if (n <= 0) throw InputError("vertex count must be positive", line_no);
      out.n = static_cast<std::size_t>(n);
      have_n = true;
      out.last_line = line_no;
      continue;
    }
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    long long u = 0;
    long long v = 0;
    if (!(fields >> u >> v)) throw InputError("expected \"u v\"", line_no);
    if (fields >> extra) throw InputError("unexpected text after edge", line_no);
    if (u < 0 || v < 0) throw InputError("vertex id out of range", line_no);
    out.edges.push_back({{static_cast<Vertex>(u), static_cast<Vertex>(v)}, line_no});
    out.last_line = line_no;
  }
  if (!have_n) throw InputError("empty input: missing vertex count", line_no == 0 ? 1 : line_no);
  return out;
}

}  // namespace detail

/// A simple connected graph.
class Graph {
 public:
  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    std::vector<detail::NumberedEdge> numbered;
    for (const Edge& e : edges) numbered.push_back({e, 0});
    return Graph(checked(n, numbered, 0));
  }

  std::size_t size() const noexcept { return adj_.size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }
  std::size_t edge_count() const {
    std::size_t total = 0;
    for (const auto& list : adj_) total += list.size();
    return total / 2;
  }
  /// Edges as (min, max) pairs in ascending lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < adj_.size(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool operator==(const Graph&) const = default;

 private:
  friend Graph parse_graph_edge_list(std::istream& in);
  explicit Graph(std::vector<std::vector<Vertex>> adj) : adj_(std::move(adj)) {}

  static std::vector<std::vector<Vertex>> checked(std::size_t n,
                                                  const std::vector<detail::NumberedEdge>& edges,
                                                  std::size_t end_line) {
    auto adj = detail::build_adjacency(n, edges, /*forbid_cycles=*/false);
    if (!detail::is_connected(adj)) throw InputError("graph is disconnected", end_line);
    return adj;
  }

  std::vector<std::vector<Vertex>> adj_;
};

/// A finite tree: connected, acyclic, n - 1 edges, n >= 1.
class Tree {
 public:
  static Tree from_edges(std::size_t n, std::span<const Edge> edges) {
    std::vector<detail::NumberedEdge> numbered;
    for (const Edge& e : edges) numbered.push_back({e, 0});
    return Tree(checked(n, numbered, 0));
  }

  /// Path 0-1-...-(n-1).
  static Tree path(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    return from_edges(n, edges);
  }

  /// Star with center 0 and `leaves` leaves.
  static Tree star(std::size_t leaves) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return from_edges(leaves + 1, edges);
  }

  std::size_t size() const noexcept { return adj_.size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  std::size_t max_degree() const {
    std::size_t best = 0;
    for (const auto& list : adj_) best = std::max(best, list.size());
    return best;
  }
  bool adjacent(Vertex u, Vertex v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < adj_.size(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }
  Graph as_graph() const { return Graph::from_edges(size(), edges()); }

  /// The tree with vertex v renamed to perm[v].
  Tree relabeled(std::span<const Vertex> perm) const {
    std::vector<Edge> out;
    for (auto [u, v] : edges()) out.emplace_back(perm[u], perm[v]);
    return from_edges(size(), out);
  }

  bool operator==(const Tree&) const = default;

 private:
  friend Tree parse_edge_list(std::istream& in);
  explicit Tree(std::vector<std::vector<Vertex>> adj) : adj_(std::move(adj)) {}

  static std::vector<std::vector<Vertex>> checked(std::size_t n,
                                                  const std::vector<detail::NumberedEdge>& edges,
                                                  std::size_t end_line) {
    auto adj = detail::build_adjacency(n, edges, /*forbid_cycles=*/true);
    if (edges.size() != n - 1)
      throw InputError("disconnected: expected " + std::to_string(n - 1) + " edges, got " +
                           std::to_string(edges.size()),
                       end_line);
    return adj;
  }

  std::vector<std::vector<Vertex>> adj_;
};

/// Parses the edge-list format: the vertex count on the first line, then
/// one "u v" pair per non-empty line. CRLF line endings are accepted.
/// Throws InputError carrying the offending line number.
inline Tree parse_edge_list(std::istream& in) {
  auto parsed = detail::read_edge_list(in);
  return Tree(Tree::checked(parsed.n, parsed.edges, parsed.last_line));
}

inline Tree parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

/// Same format, but cycles are allowed; the graph must be simple and connected.
inline Graph parse_graph_edge_list(std::istream& in) {
  auto parsed = detail::read_edge_list(in);
  return Graph(Graph::checked(parsed.n, parsed.edges, parsed.last_line));
}

inline Graph parse_graph_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph_edge_list(in);
}

inline std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

inline std::string to_edge_list(const Tree& t) { return to_edge_list(t.as_graph()); }

/// The automorphism-invariant core of a finite tree: one vertex, or the two
/// ends of an edge (first < second).
struct Center {
  enum class Kind { vertex, edge };
  Kind kind = Kind::vertex;
  Vertex first = 0;
  Vertex second = 0;

  static Center at_vertex(Vertex w) { return {Kind::vertex, w, w}; }
  static Center at_edge(Vertex u, Vertex v) {
    return {Kind::edge, std::min(u, v), std::max(u, v)};
  }
  bool is_vertex() const noexcept { return kind == Kind::vertex; }
  bool is_edge() const noexcept { return kind == Kind::edge; }
  bool operator==(const Center&) const = default;
};

/// Center by iterated removal of all leaves.
inline Center center(const Tree& t) {
  const std::size_t n = t.size();
  if (n == 1) return Center::at_vertex(0);
  std::vector<std::size_t> degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] == 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex u : t.neighbors(leaf)) {
        if (--degree[u] == 1) next.push_back(u);
      }
    }
    layer = std::move(next);
  }
  if (layer.size() == 1) return Center::at_vertex(layer[0]);
  return Center::at_edge(layer[0], layer[1]);
}

/// A tree oriented away from a root. Children are listed in ascending id.
class RootedTree {
 public:
  RootedTree(Tree tree, Vertex root) : tree_(std::move(tree)), root_(root) {
    const std::size_t n = tree_.size();
    if (root >= n)
      throw std::out_of_range("root " + std::to_string(root) + " out of range (n = " +
                              std::to_string(n) + ")");
    parent_.assign(n, kNoVertex);
    children_.assign(n, {});
    size_.assign(n, 1);
    order_.reserve(n);
    order_.push_back(root);
    for (std::size_t i = 0; i < order_.size(); ++i) {
      Vertex v = order_[i];
      for (Vertex u : tree_.neighbors(v)) {
        if (u == parent_[v]) continue;
        parent_[u] = v;
        children_[v].push_back(u);
        order_.push_back(u);
      }
    }
    for (std::size_t i = n; i-- > 1;) size_[parent_[order_[i]]] += size_[order_[i]];
  }

  const Tree& tree() const noexcept { return tree_; }
  Vertex root() const noexcept { return root_; }
  std::size_t size() const noexcept { return tree_.size(); }
  std::optional<Vertex> parent(Vertex v) const {
    if (parent_[v] == kNoVertex) return std::nullopt;
    return parent_[v];
  }
  std::span<const Vertex> children(Vertex v) const { return children_[v]; }
  std::size_t subtree_size(Vertex v) const { return size_[v]; }
  /// Breadth-first order from the root; every parent precedes its children.
  std::span<const Vertex> order() const { return order_; }

 private:
  Tree tree_;
  Vertex root_;
  std::vector<Vertex> parent_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<std::size_t> size_;
  std::vector<Vertex> order_;
};

inline RootedTree root_at(const Tree& t, Vertex w) { return RootedTree(t, w); }

/// A 2-coloring; the black vertices form the set S.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::size_t n) : black_(n, 0) {}

  /// "1" marks a black vertex, "0" a white one, in vertex-id order.
  static Coloring from_bits(std::string_view bits) {
    Coloring c(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1')
        c.black_[i] = 1;
      else if (bits[i] != '0')
        throw InputError("coloring must consist of 0/1 characters");
    }
    return c;
  }

  std::size_t size() const noexcept { return black_.size(); }
  bool black(Vertex v) const { return black_[v] != 0; }
  void set_black(Vertex v, bool is_black) { black_[v] = is_black ? 1 : 0; }
  std::size_t black_count() const {
    return static_cast<std::size_t>(std::count(black_.begin(), black_.end(), 1));
  }

  Coloring complement() const {
    Coloring c = *this;
    for (auto& b : c.black_) b = b ? 0 : 1;
    return c;
  }

  std::string bits() const {
    std::string out(black_.size(), '0');
    for (std::size_t i = 0; i < black_.size(); ++i)
      if (black_[i]) out[i] = '1';
    return out;
  }

  bool operator==(const Coloring&) const = default;

 private:
  std::vector<unsigned char> black_;
};

/// Graphviz rendering with black vertices filled.
inline std::string to_dot(const Tree& t, const Coloring& c) {
  std::string out = "graph T {\n  node [shape=circle, style=filled];\n";
  for (Vertex v = 0; v < t.size(); ++v) {
    out += "  " + std::to_string(v) + (c.black(v) ? " [fillcolor=black, fontcolor=white];\n"
                                                   : " [fillcolor=white];\n");
  }
  for (auto [u, v] : t.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace treesym
