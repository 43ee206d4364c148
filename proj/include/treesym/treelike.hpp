#pragma once

// Rooted graphs in which every vertex has a child whose only parent it is,
// the spanning forest of "sole parent" edges, and a component-wise
// construction of a distinguishing coloring that is checked by brute force.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "treesym/canonical.hpp"
#include "treesym/coloring.hpp"
#include "treesym/oracle.hpp"
#include "treesym/tree.hpp"

namespace treesym {

class RootedGraph {
 public:
  RootedGraph(Graph graph, Vertex root) : graph_(std::move(graph)), root_(root) {
    if (root_ >= graph_.size()) throw std::out_of_range("root out of range");
    const std::size_t n = graph_.size();
    dist_.assign(n, kNoVertex);
    dist_[root_] = 0;
    std::vector<Vertex> queue{root_};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Vertex y : graph_.neighbors(queue[i]))
        if (dist_[y] == kNoVertex) {
          dist_[y] = dist_[queue[i]] + 1;
          queue.push_back(y);
        }
    parents_.resize(n);
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y : graph_.neighbors(x))
        if (dist_[y] + 1 == dist_[x]) parents_[x].push_back(y);
  }

  const Graph& graph() const noexcept { return graph_; }
  Vertex root() const noexcept { return root_; }
  std::size_t size() const noexcept { return graph_.size(); }
  std::size_t distance(Vertex v) const { return dist_[v]; }
  /// Neighbors one step closer to the root (the shortest-path predecessors).
  std::span<const Vertex> parents(Vertex v) const { return parents_[v]; }
  /// y lies on every shortest x-w path through the edge xy iff y is x's
  /// unique predecessor.
  std::optional<Vertex> sole_parent(Vertex x) const {
    if (parents_[x].size() == 1) return parents_[x][0];
    return std::nullopt;
  }

 private:
  Graph graph_;
  Vertex root_;
  std::vector<std::size_t> dist_;
  std::vector<std::vector<Vertex>> parents_;
};

/// Per-vertex witnesses: witness[y] is the smallest child x of y whose only
/// parent is y, if any.
struct TreelikeReport {
  std::vector<std::optional<Vertex>> witness;
  bool all_vertices = false;     // every vertex, the root included, has a witness
  bool all_but_root = false;     // the root is exempt
};

inline TreelikeReport is_treelike(const RootedGraph& g) {
  TreelikeReport out;
  out.witness.assign(g.size(), std::nullopt);
  for (Vertex x = 0; x < g.size(); ++x) {
    if (auto p = g.sole_parent(x); p && !out.witness[*p]) out.witness[*p] = x;
  }
  out.all_but_root = true;
  for (Vertex y = 0; y < g.size(); ++y)
    if (y != g.root() && !out.witness[y]) out.all_but_root = false;
  out.all_vertices = out.all_but_root && out.witness[g.root()].has_value();
  return out;
}

struct SpanningForest {
  std::vector<Edge> edges;                      // (parent, child) as (min, max), ascending
  std::vector<std::vector<Vertex>> components;  // each ascending; ordered by smallest vertex
  std::vector<std::size_t> component_of;
  std::vector<Vertex> top;                      // per component: its vertex nearest the root
};

/// F = { xy : y is the sole parent of x }. Every non-root vertex has at most
/// one F-edge towards the root, so F is a forest; this is re-checked.
inline SpanningForest extract_forest(const RootedGraph& g) {
  const std::size_t n = g.size();
  SpanningForest f;
  detail::DisjointSets sets(n);
  for (Vertex x = 0; x < n; ++x) {
    if (auto p = g.sole_parent(x)) {
      if (!sets.unite(x, *p)) throw std::logic_error("sole-parent edges contain a cycle");
      f.edges.emplace_back(std::min(x, *p), std::max(x, *p));
    }
  }
  std::sort(f.edges.begin(), f.edges.end());
  f.component_of.assign(n, kNoVertex);
  for (Vertex v = 0; v < n; ++v) {
    Vertex r = sets.find(v);
    if (f.component_of[r] == kNoVertex) {
      f.component_of[r] = f.components.size();
      f.components.emplace_back();
    }
    f.component_of[v] = f.component_of[r];
    f.components[f.component_of[v]].push_back(v);
  }
  for (const auto& comp : f.components) {
    Vertex best = comp.front();
    for (Vertex v : comp)
      if (g.distance(v) < g.distance(best)) best = v;
    f.top.push_back(best);
  }
  return f;
}

namespace detail {

struct Component {
  std::vector<Vertex> vertices;  // local id -> global id
  Tree tree;
};

inline Component component_tree(const SpanningForest& f, std::size_t index) {
  const auto& verts = f.components[index];
  std::map<Vertex, Vertex> local;
  for (Vertex v : verts) local.emplace(v, local.size());
  std::vector<Edge> edges;
  for (auto [a, b] : f.edges)
    if (local.count(a) && local.count(b)) edges.emplace_back(local[a], local[b]);
  return {verts, Tree::from_edges(verts.size(), edges)};
}

// Vertices of S whose neighbors (within the component) all lie in S.
inline std::size_t closed_count(const Tree& t, const Coloring& c) {
  std::size_t closed = 0;
  for (Vertex v = 0; v < t.size(); ++v) {
    if (!c.black(v)) continue;
    bool open = false;
    for (Vertex u : t.neighbors(v)) open = open || !c.black(u);
    closed += !open;
  }
  return closed;
}

}  // namespace detail

struct TreelikeColoring {
  SpanningForest forest;
  std::optional<Coloring> coloring;
  bool root_has_degree_one = false;
};

/// Chooses, component by component, an admissible distinguishing set of the
/// component tree that is inequivalent to those already chosen for
/// isomorphic components, and keeps the union only if brute force confirms
/// that the identity is the only automorphism of g preserving it.
///
/// Admissible: for the root's component, any distinguishing set when the
/// root has degree 1 and otherwise sets with exactly one vertex lacking a
/// neighbor outside the set; for other components, sets in which every
/// vertex has a neighbor outside the set.
inline TreelikeColoring treelike_distinguish(const RootedGraph& g,
                                             std::size_t limit = kDefaultAutomorphismLimit) {
  const std::size_t n = g.size();
  if (n > kOracleMaxVertices)
    throw std::invalid_argument("treelike_distinguish verifies by brute force; n must be at most " +
                                std::to_string(kOracleMaxVertices));
  TreelikeColoring out;
  out.forest = extract_forest(g);
  out.root_has_degree_one = g.graph().degree(g.root()) == 1;
  const auto& f = out.forest;

  TypeTable table;
  std::set<UnrootedType> used;
  Coloring total(n);
  for (std::size_t i = 0; i < f.components.size(); ++i) {
    auto comp = detail::component_tree(f, i);
    const bool root_component = f.component_of[g.root()] == i;
    const std::size_t k = comp.tree.size();
    std::optional<Coloring> chosen;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k) && !chosen; ++mask) {
      Coloring c(k);
      for (Vertex v = 0; v < k; ++v) c.set_black(v, (mask >> v & 1U) != 0);
      const std::size_t closed = detail::closed_count(comp.tree, c);
      if (root_component) {
        if (!out.root_has_degree_one && closed != 1) continue;
      } else if (closed != 0) {
        continue;
      }
      if (!verify_distinguishing(comp.tree, c, std::nullopt, table)) continue;
      if (used.count(unrooted_type(comp.tree, table, c))) continue;
      chosen = c;
    }
    if (!chosen) return out;
    used.insert(unrooted_type(comp.tree, table, *chosen));
    for (Vertex v = 0; v < k; ++v) total.set_black(comp.vertices[v], chosen->black(v));
  }

  OrbitOracle::Mask mask = 0;
  for (Vertex v = 0; v < n; ++v)
    if (total.black(v)) mask |= OrbitOracle::Mask{1} << v;
  for (const auto& p : brute_graph_aut(g.graph(), std::nullopt, limit)) {
    if (moved_count(p) == 0) continue;
    OrbitOracle::Mask image = 0;
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1U) image |= OrbitOracle::Mask{1} << p[v];
    if (image == mask) return out;
  }
  out.coloring = total;
  return out;
}

}  // namespace treesym
