#pragma once

// Distinguishing 2-colorings: explicit unranking of the a(T, w) classes,
// construction, verification by colored canonical codes, and the iterative
// extension of a ray coloring to a truncated one-ended tree.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "treesym/asymmetrizing.hpp"
#include "treesym/bignat.hpp"
#include "treesym/canonical.hpp"
#include "treesym/session.hpp"
#include "treesym/tree.hpp"

namespace treesym {

namespace detail {

// Decodes `index` < a(type of start) into colors for the subtree of
// `start`. Mixed radix: the lowest digit is the root color (0 black,
// 1 white), then one digit of radix C(a(x), mu(x)) per twin class in
// canonical class order; each digit is a colex-ranked mu-subset of the
// class's sub-coloring indices, handed to the twins in ascending id order.
template <class ChildrenFn>
void unrank_subtree(Session& session, std::span<const TypeId> type, const ChildrenFn& children,
                    Vertex start, BigNat index, Coloring& out) {
  std::vector<std::pair<Vertex, BigNat>> stack;
  stack.emplace_back(start, std::move(index));
  while (!stack.empty()) {
    auto [x, k] = std::move(stack.back());
    stack.pop_back();
    out.set_black(x, (k % 2) == 0);
    BigNat rest = k / 2;
    const auto kids = children(x);
    for (const auto& cls : group_twins(kids, type, session.types())) {
      const std::size_t mult = cls.multiplicity();
      BigNat radix = binomial(session.asym(cls.type), mult);
      if (radix == 0) throw std::logic_error("unranking reached a non-distinguishable subtree");
      BigNat digit = rest % radix;
      rest /= radix;
      auto subset = unrank_subset(std::move(digit), mult);
      for (std::size_t j = 0; j < mult; ++j) stack.emplace_back(cls.members[j], std::move(subset[j]));
    }
  }
}

inline bool has_equal_siblings(std::vector<TypeId> kids) {
  std::sort(kids.begin(), kids.end());
  return std::adjacent_find(kids.begin(), kids.end()) != kids.end();
}

}  // namespace detail

/// The k-th distinguishing class of (T, w) as a concrete coloring, for
/// 0 <= k < a(T, w). Distinct k give inequivalent colorings.
inline Coloring unrank_distinguishing(const RootedTree& rt, const BigNat& k, Session& session) {
  auto type = classify(rt, session.types());
  const BigNat total = session.asym(type[rt.root()]);
  if (k < 0 || k >= total)
    throw std::out_of_range("coloring index " + to_decimal(k) + " out of range [0, " +
                            to_decimal(total) + ")");
  Coloring out(rt.size());
  detail::unrank_subtree(session, type, [&](Vertex x) { return rt.children(x); }, rt.root(), k,
                         out);
  return out;
}

inline Coloring unrank_distinguishing(const RootedTree& rt, const BigNat& k) {
  Session session;
  return unrank_distinguishing(rt, k, session);
}

/// The k-th of the a(T) inequivalent distinguishing colorings of the
/// unrooted tree, 0 <= k < a(T). For a central edge uv (u < v) with
/// isomorphic halves, k ranks the pair i < j of half indices (i goes to u);
/// otherwise k = i + a(T^u) * j.
inline Coloring unrank_unrooted(const Tree& t, const BigNat& k, Session& session) {
  auto ct = center_types(t, session.types());
  const BigNat total = asym_unrooted(t, session);
  if (k < 0 || k >= total)
    throw std::out_of_range("coloring index " + to_decimal(k) + " out of range [0, " +
                            to_decimal(total) + ")");
  Coloring out(t.size());
  auto children = [&](Vertex x) { return ct.children(x); };
  if (ct.center.is_vertex()) {
    detail::unrank_subtree(session, ct.type, children, ct.center.first, k, out);
    return out;
  }
  BigNat ku;
  BigNat kv;
  if (ct.halves_isomorphic()) {
    auto pair = unrank_subset(k, 2);
    ku = pair[0];
    kv = pair[1];
  } else {
    const BigNat au = session.asym(ct.root_type);
    ku = k % au;
    kv = k / au;
  }
  detail::unrank_subtree(session, ct.type, children, ct.center.first, ku, out);
  detail::unrank_subtree(session, ct.type, children, ct.center.second, kv, out);
  return out;
}

/// True iff no non-identity automorphism (fixing `pinned`, if given)
/// preserves the coloring. Such an automorphism exists iff some vertex has
/// two children with identical colored subtree types, or the halves of a
/// central edge have identical colored types.
inline bool verify_distinguishing(const Tree& t, const Coloring& c, std::optional<Vertex> pinned,
                                  TypeTable& table) {
  if (c.size() != t.size())
    throw std::invalid_argument("coloring has " + std::to_string(c.size()) + " entries, tree has " +
                                std::to_string(t.size()) + " vertices");
  if (pinned) {
    RootedTree rt(t, *pinned);
    auto type = classify(rt, table, c);
    for (Vertex x = 0; x < t.size(); ++x) {
      std::vector<TypeId> kids;
      for (Vertex y : rt.children(x)) kids.push_back(type[y]);
      if (detail::has_equal_siblings(std::move(kids))) return false;
    }
    return true;
  }
  auto ct = center_types(t, table, c);
  for (Vertex x = 0; x < t.size(); ++x) {
    std::vector<TypeId> kids;
    for (Vertex y : ct.children(x)) kids.push_back(ct.type[y]);
    if (detail::has_equal_siblings(std::move(kids))) return false;
  }
  return !(ct.other_half && *ct.other_half == ct.root_type);
}

inline bool verify_distinguishing(const Tree& t, const Coloring& c,
                                  std::optional<Vertex> pinned = std::nullopt) {
  TypeTable table;
  return verify_distinguishing(t, c, pinned, table);
}

/// A verified distinguishing coloring (index 0 of unrank_unrooted), or
/// nothing when a(T) = 0.
inline std::optional<Coloring> construct_distinguishing(const Tree& t, Session& session) {
  if (asym_unrooted(t, session) == 0) return std::nullopt;
  Coloring c = unrank_unrooted(t, 0, session);
  if (!verify_distinguishing(t, c, std::nullopt, session.types()))
    throw std::logic_error("constructed coloring failed verification");
  return c;
}

inline std::optional<Coloring> construct_distinguishing(const Tree& t) {
  Session session;
  return construct_distinguishing(t, session);
}

/// A finite tree seen as a ray v_0 ... v_D (v_0 a leaf) with a finite lobe
/// hanging from every ray vertex: the component of T minus the ray edges
/// containing that vertex.
class OneEndedTruncation {
 public:
  OneEndedTruncation(Tree tree, std::vector<Vertex> ray) : tree_(std::move(tree)), ray_(std::move(ray)) {
    const std::size_t n = tree_.size();
    if (ray_.empty()) throw std::invalid_argument("ray must contain at least one vertex");
    std::vector<std::size_t> position(n, kNoVertex);
    for (std::size_t i = 0; i < ray_.size(); ++i) {
      if (ray_[i] >= n) throw std::invalid_argument("ray vertex out of range");
      if (position[ray_[i]] != kNoVertex) throw std::invalid_argument("ray repeats a vertex");
      position[ray_[i]] = i;
      if (i > 0 && !tree_.adjacent(ray_[i - 1], ray_[i]))
        throw std::invalid_argument("consecutive ray vertices must be adjacent");
    }
    if (tree_.degree(ray_[0]) > 1) throw std::invalid_argument("ray origin must have degree 1");
    lobes_.resize(ray_.size());
    for (std::size_t i = 0; i < ray_.size(); ++i) {
      auto& lobe = lobes_[i];
      lobe.push_back(ray_[i]);
      for (std::size_t j = 0; j < lobe.size(); ++j) {
        Vertex x = lobe[j];
        for (Vertex y : tree_.neighbors(x)) {
          if (position[y] != kNoVertex) continue;
          lobe.push_back(y);
          position[y] = i;
        }
      }
    }
  }

  const Tree& tree() const noexcept { return tree_; }
  std::span<const Vertex> ray() const { return ray_; }
  /// lobes()[i] starts with ray()[i].
  const std::vector<std::vector<Vertex>>& lobes() const noexcept { return lobes_; }
  Vertex endpoint() const { return ray_.back(); }

 private:
  Tree tree_;
  std::vector<Vertex> ray_;
  std::vector<std::vector<Vertex>> lobes_;
};

/// Raised when some family of isomorphic lobe branches has fewer
/// inequivalent distinguishing sub-colorings than it needs.
class RayExtensionError : public std::runtime_error {
 public:
  RayExtensionError(std::size_t ray_index, Vertex vertex, std::string branch_code, std::size_t needed,
                    BigNat available)
      : std::runtime_error("cannot extend coloring at ray vertex " + std::to_string(vertex) +
                           " (index " + std::to_string(ray_index) + "): branch type " +
                           branch_code + " needs " + std::to_string(needed) +
                           " inequivalent colorings, only " + to_decimal(available) + " exist"),
        ray_index_(ray_index),
        vertex_(vertex),
        branch_code_(std::move(branch_code)),
        needed_(needed),
        available_(std::move(available)) {}

  std::size_t ray_index() const noexcept { return ray_index_; }
  Vertex vertex() const noexcept { return vertex_; }
  const std::string& branch_code() const noexcept { return branch_code_; }
  std::size_t needed() const noexcept { return needed_; }
  const BigNat& available() const noexcept { return available_; }

 private:
  std::size_t ray_index_;
  Vertex vertex_;
  std::string branch_code_;
  std::size_t needed_;
  BigNat available_;
};

namespace detail {

inline TypeId colored_subtree_type(const RootedTree& rt, TypeTable& table, const Coloring& c,
                                   Vertex x) {
  std::vector<Vertex> order{x};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex y : rt.children(order[i])) order.push_back(y);
  std::vector<TypeId> type(rt.size());
  std::vector<TypeId> kids;
  for (std::size_t i = order.size(); i-- > 0;) {
    Vertex v = order[i];
    kids.clear();
    for (Vertex y : rt.children(v)) kids.push_back(type[y]);
    type[v] = table.intern(label_of(c, v), kids);
  }
  return type[x];
}

inline void paint_subtree(const RootedTree& rt, Vertex x, bool black, Coloring& c) {
  std::vector<Vertex> stack{x};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    c.set_black(v, black);
    for (Vertex y : rt.children(v)) stack.push_back(y);
  }
}

}  // namespace detail

/// Extends a coloring of the ray (ray_colors.black(i) is the color of v_i)
/// to the whole truncation so that only the identity among automorphisms
/// fixing v_D preserves it.
///
/// Walking up the ray, at v_i let L_i be the branch holding v_{i-1} (already
/// colored). Branches of v_i's lobe isomorphic to L_i get pairwise
/// inequivalent distinguishing colorings that also differ from L_i's; the
/// remaining branches take the smallest-index distinguishing colorings of
/// their classes, or all white when together they are asymmetric.
inline Coloring extend_ray_coloring(const OneEndedTruncation& tr, const Coloring& ray_colors,
                                    Session& session) {
  const auto ray = tr.ray();
  if (ray_colors.size() != ray.size())
    throw std::invalid_argument("ray coloring must have one entry per ray vertex");
  const Tree& t = tr.tree();
  RootedTree rt(t, tr.endpoint());
  TypeTable& table = session.types();
  auto type = classify(rt, table);
  Coloring out(t.size());
  for (std::size_t i = 0; i < ray.size(); ++i) out.set_black(ray[i], ray_colors.black(i));
  auto children = [&](Vertex x) { return rt.children(x); };

  for (std::size_t i = 0; i < ray.size(); ++i) {
    const Vertex x = ray[i];
    const std::optional<Vertex> prev = i > 0 ? std::optional<Vertex>(ray[i - 1]) : std::nullopt;
    std::vector<Vertex> branches;
    for (Vertex y : rt.children(x))
      if (y != prev) branches.push_back(y);
    const auto classes = group_twins(branches, type, table);

    std::optional<TypeId> prev_colored;
    if (prev) prev_colored = detail::colored_subtree_type(rt, table, out, *prev);

    bool rest_asymmetric = true;
    for (const auto& cls : classes) {
      if (prev && cls.type == type[*prev]) continue;
      if (cls.multiplicity() > 1 || session.aut(cls.type) != 1) rest_asymmetric = false;
    }

    for (const auto& cls : classes) {
      const std::size_t mult = cls.multiplicity();
      const BigNat available = session.asym(cls.type);
      if (prev && cls.type == type[*prev]) {
        // twins of L_i: avoid L_i's colored type
        std::size_t placed = 0;
        for (BigNat j = 0; placed < mult && j < available; ++j) {
          const Vertex member = cls.members[placed];
          detail::unrank_subtree(session, type, children, member, j, out);
          if (detail::colored_subtree_type(rt, table, out, member) != *prev_colored) ++placed;
        }
        if (placed < mult)
          throw RayExtensionError(i, x, table.code(cls.type).text, mult + 1, available);
        continue;
      }
      if (rest_asymmetric) {
        for (Vertex member : cls.members) detail::paint_subtree(rt, member, false, out);
        continue;
      }
      if (available < mult) throw RayExtensionError(i, x, table.code(cls.type).text, mult, available);
      for (std::size_t j = 0; j < mult; ++j)
        detail::unrank_subtree(session, type, children, cls.members[j], BigNat(j), out);
    }
  }
  if (!verify_distinguishing(t, out, tr.endpoint(), table))
    throw std::logic_error("ray extension failed verification");
  return out;
}

inline Coloring extend_ray_coloring(const OneEndedTruncation& tr, const Coloring& ray_colors) {
  Session session;
  return extend_ray_coloring(tr, ray_colors, session);
}

}  // namespace treesym
