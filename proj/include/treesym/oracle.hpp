#pragma once

// Brute-force ground truth. Automorphisms come from plain backtracking over
// the adjacency structure (no canonical forms), and distinguishing sets from
// enumerating all 2^n vertex subsets as bit masks.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "treesym/automorphism.hpp"
#include "treesym/bignat.hpp"
#include "treesym/tree.hpp"

namespace treesym {

inline constexpr std::size_t kOracleMaxVertices = 16;
inline constexpr std::size_t kDefaultAutomorphismLimit = 3628800;  // 10!

/// Every adjacency-preserving permutation of `g` (fixing `pinned`, if
/// given). Vertices are assigned in breadth-first order so each new vertex
/// has an already-mapped neighbor; candidates must match degree and
/// adjacency to every mapped vertex. Throws AutomorphismOverflow past
/// `limit`.
inline std::vector<Permutation> brute_graph_aut(const Graph& g, std::optional<Vertex> pinned = std::nullopt,
                                                std::size_t limit = kDefaultAutomorphismLimit) {
  const std::size_t n = g.size();
  if (pinned && *pinned >= n) throw std::out_of_range("pinned vertex out of range");
  std::vector<char> adjacent(n * n, 0);
  for (auto [u, v] : g.edges()) adjacent[u * n + v] = adjacent[v * n + u] = 1;

  std::vector<Vertex> order{pinned.value_or(0)};
  std::vector<char> seen(n, 0);
  seen[order[0]] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex u : g.neighbors(order[i]))
      if (!seen[u]) {
        seen[u] = 1;
        order.push_back(u);
      }

  std::vector<Permutation> out;
  Permutation image(n, kNoVertex);
  std::vector<char> used(n, 0);

  auto consistent = [&](std::size_t depth, Vertex target) {
    const Vertex v = order[depth];
    if (used[target] || g.degree(target) != g.degree(v)) return false;
    for (std::size_t j = 0; j < depth; ++j) {
      const Vertex u = order[j];
      if (adjacent[v * n + u] != adjacent[target * n + image[u]]) return false;
    }
    return true;
  };

  // iterative DFS; candidate[d] is the next target to try at depth d
  std::vector<Vertex> candidate(n + 1, 0);
  std::size_t depth = 0;
  while (true) {
    if (depth == n) {
      if (out.size() >= limit) throw AutomorphismOverflow(limit);
      out.push_back(image);
      --depth;
      used[image[order[depth]]] = 0;
      image[order[depth]] = kNoVertex;
      continue;
    }
    Vertex next = kNoVertex;
    if (depth == 0 && pinned) {
      if (candidate[0] <= *pinned) next = *pinned;
    } else {
      for (Vertex t = candidate[depth]; t < n; ++t)
        if (consistent(depth, t)) {
          next = t;
          break;
        }
    }
    if (next == kNoVertex) {
      if (depth == 0) break;
      candidate[depth] = 0;
      --depth;
      used[image[order[depth]]] = 0;
      image[order[depth]] = kNoVertex;
      continue;
    }
    candidate[depth] = next + 1;
    image[order[depth]] = next;
    used[next] = 1;
    ++depth;
    candidate[depth] = 0;
  }
  return out;
}

/// Exhaustive subset analysis of a tree under Aut(T) or Aut(T, pinned).
class OrbitOracle {
 public:
  using Mask = std::uint32_t;

  explicit OrbitOracle(const Tree& t, std::optional<Vertex> pinned = std::nullopt,
                       std::size_t limit = kDefaultAutomorphismLimit)
      : n_(t.size()) {
    if (n_ > kOracleMaxVertices)
      throw std::invalid_argument("oracle supports at most " + std::to_string(kOracleMaxVertices) +
                                  " vertices, got " + std::to_string(n_));
    auto autos = brute_graph_aut(t.as_graph(), pinned, limit);
    aut_order_ = autos.size();
    for (auto& p : autos)
      if (moved_count(p) > 0) nontrivial_.push_back(std::move(p));
    // small supports first: they fix the most subsets, so rejection is quick
    std::stable_sort(nontrivial_.begin(), nontrivial_.end(),
                     [](const Permutation& a, const Permutation& b) { return moved_count(a) < moved_count(b); });
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t aut_order() const noexcept { return aut_order_; }
  const std::vector<Permutation>& nontrivial_automorphisms() const noexcept { return nontrivial_; }

  Mask apply(const Permutation& p, Mask s) const {
    Mask r = 0;
    for (Vertex v = 0; v < n_; ++v)
      if (s >> v & 1U) r |= Mask{1} << p[v];
    return r;
  }

  bool is_distinguishing(Mask s) const {
    for (const auto& p : nontrivial_)
      if (apply(p, s) == s) return false;
    return true;
  }

  /// Smallest mask in the orbit of s.
  Mask orbit_min(Mask s) const {
    Mask best = s;
    for (const auto& p : nontrivial_) best = std::min(best, apply(p, s));
    return best;
  }

  static Mask to_mask(const Coloring& c) {
    Mask m = 0;
    for (Vertex v = 0; v < c.size(); ++v)
      if (c.black(v)) m |= Mask{1} << v;
    return m;
  }

  Coloring to_coloring(Mask m) const {
    Coloring c(n_);
    for (Vertex v = 0; v < n_; ++v) c.set_black(v, (m >> v & 1U) != 0);
    return c;
  }

  /// Minimal representatives of all orbits of distinguishing sets, ascending.
  std::vector<Mask> distinguishing_orbit_representatives() const {
    std::vector<Mask> reps;
    for (Mask s = 0; s < (Mask{1} << n_); ++s)
      if (is_distinguishing(s) && orbit_min(s) == s) reps.push_back(s);
    return reps;
  }

 private:
  std::size_t n_;
  std::size_t aut_order_ = 0;
  std::vector<Permutation> nontrivial_;
};

/// Counts over the full power set. The regular-action identity
/// distinguishing_count = orbit_count * aut_order is measured, not assumed.
struct OrbitReport {
  BigNat total_colorings;
  BigNat distinguishing_count;
  BigNat orbit_count;
  BigNat aut_order;
  std::optional<Vertex> pinned;

  bool regular_action_holds() const { return distinguishing_count == orbit_count * aut_order; }
};

inline OrbitReport brute_asym(const Tree& t, std::optional<Vertex> pinned = std::nullopt) {
  OrbitOracle oracle(t, pinned);
  const std::size_t n = t.size();
  std::uint64_t distinguishing = 0;
  std::uint64_t orbits = 0;
  for (OrbitOracle::Mask s = 0; s < (OrbitOracle::Mask{1} << n); ++s) {
    if (!oracle.is_distinguishing(s)) continue;
    ++distinguishing;
    if (oracle.orbit_min(s) == s) ++orbits;
  }
  return {pow2(n), distinguishing, orbits, oracle.aut_order(), pinned};
}

inline Motion brute_motion(const Tree& t, std::size_t limit = kDefaultAutomorphismLimit) {
  std::optional<std::size_t> best;
  for (const auto& p : brute_graph_aut(t.as_graph(), std::nullopt, limit)) {
    const std::size_t moved = moved_count(p);
    if (moved > 0 && (!best || moved < *best)) best = moved;
  }
  return best ? Motion::finite(*best) : Motion::asymmetric();
}

}  // namespace treesym
