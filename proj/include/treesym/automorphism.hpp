#pragma once

// Automorphism group order, motion and explicit automorphism enumeration
// for finite trees.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "treesym/bignat.hpp"
#include "treesym/canonical.hpp"
#include "treesym/session.hpp"
#include "treesym/tree.hpp"

namespace treesym {

/// Minimum number of vertices moved by a non-identity automorphism, or
/// Asymmetric when the identity is the only automorphism. Asymmetric orders
/// above every finite value.
class Motion {
 public:
  static Motion finite(std::size_t k) {
    if (k < 2) throw std::invalid_argument("finite motion must be at least 2");
    return Motion(k);
  }
  static Motion asymmetric() { return Motion(std::nullopt); }

  bool is_asymmetric() const noexcept { return !value_; }
  bool is_finite() const noexcept { return value_.has_value(); }
  std::size_t value() const {
    if (!value_) throw std::logic_error("motion of an asymmetric graph has no finite value");
    return *value_;
  }

  std::string to_string() const { return value_ ? std::to_string(*value_) : "asymmetric"; }

  bool operator==(const Motion&) const = default;
  std::strong_ordering operator<=>(const Motion& other) const {
    if (value_ && other.value_) return *value_ <=> *other.value_;
    if (!value_ && !other.value_) return std::strong_ordering::equal;
    return value_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  explicit Motion(std::optional<std::size_t> v) : value_(v) {}
  std::optional<std::size_t> value_;
};

using Permutation = std::vector<Vertex>;

inline std::size_t moved_count(const Permutation& p) {
  std::size_t moved = 0;
  for (Vertex v = 0; v < p.size(); ++v) moved += p[v] != v;
  return moved;
}

/// |Aut(T^x, x)| of the rooted tree at its root.
inline BigNat aut_order(const RootedTree& rt, Session& session) {
  auto type = classify(rt, session.types());
  return session.aut(type[rt.root()]);
}

inline BigNat aut_order(const Tree& t, Session& session) {
  auto ct = center_types(t, session.types());
  if (!ct.other_half) return session.aut(ct.root_type);
  BigNat order = session.aut(ct.root_type) * session.aut(*ct.other_half);
  if (ct.halves_isomorphic()) order *= 2;
  return order;
}

inline BigNat aut_order(const Tree& t) {
  Session session;
  return aut_order(t, session);
}

/// Closed form: the cheapest automorphism either swaps the subtrees of two
/// twin siblings (moving 2|T^x| vertices) or, for a central edge with
/// isomorphic halves, swaps the halves (moving all n).
inline Motion motion(const Tree& t, Session& session) {
  auto ct = center_types(t, session.types());
  std::optional<std::size_t> best;
  auto consider = [&](std::size_t k) {
    if (!best || k < *best) best = k;
  };
  for (Vertex x : ct.rooted.order()) {
    auto kids = ct.children(x);
    for (const auto& cls : group_twins(kids, ct.type, session.types())) {
      if (cls.multiplicity() >= 2) consider(2 * ct.rooted.subtree_size(cls.representative()));
    }
  }
  if (ct.halves_isomorphic()) consider(t.size());
  if (!best) return Motion::asymmetric();
  if (*best % 2 != 0) throw std::logic_error("odd motion computed for a tree");
  return Motion::finite(*best);
}

inline Motion motion(const Tree& t) {
  Session session;
  return motion(t, session);
}

/// Thrown when an enumeration would exceed its limit.
class AutomorphismOverflow : public std::runtime_error {
 public:
  explicit AutomorphismOverflow(std::size_t limit)
      : std::runtime_error("more than " + std::to_string(limit) +
                           " automorphisms; use aut_order instead"),
        limit_(limit) {}
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

namespace detail {

// Backtracking over isomorphisms of the centered tree onto itself. A pair
// (a, b) maps a onto b; the children of a are matched to the children of b
// class by class, trying every bijection within each class.
class AutomorphismWalker {
 public:
  AutomorphismWalker(const CenteredTypes& ct, const std::function<void(const Permutation&)>& emit)
      : ct_(ct), emit_(emit), image_(ct.rooted.size(), kNoVertex) {}

  void run() {
    const Center& c = ct_.center;
    if (c.is_vertex()) {
      work_.push_back({c.first, c.first});
      step(0);
      return;
    }
    work_ = {{c.first, c.first}, {c.second, c.second}};
    step(0);
    if (ct_.halves_isomorphic()) {
      work_ = {{c.first, c.second}, {c.second, c.first}};
      step(0);
    }
  }

 private:
  struct ClassMatch {
    std::vector<Vertex> from;
    std::vector<Vertex> to;  // ascending
  };

  void step(std::size_t i) {
    if (i == work_.size()) {
      emit_(image_);
      return;
    }
    auto [a, b] = work_[i];
    image_[a] = b;
    const auto classes = match_classes(a, b);
    choose(i, classes, 0);
  }

  std::vector<ClassMatch> match_classes(Vertex a, Vertex b) const {
    std::vector<ClassMatch> out;
    for (Vertex x : ct_.children(a)) {
      auto it = std::find_if(out.begin(), out.end(),
                             [&](const ClassMatch& m) { return ct_.type[m.from[0]] == ct_.type[x]; });
      if (it == out.end())
        out.push_back({{x}, {}});
      else
        it->from.push_back(x);
    }
    for (Vertex y : ct_.children(b)) {
      auto it = std::find_if(out.begin(), out.end(),
                             [&](const ClassMatch& m) { return ct_.type[m.from[0]] == ct_.type[y]; });
      if (it == out.end()) throw std::logic_error("child types of mapped vertices disagree");
      it->to.push_back(y);
    }
    for (auto& m : out) {
      if (m.from.size() != m.to.size())
        throw std::logic_error("class sizes of mapped vertices disagree");
      std::sort(m.to.begin(), m.to.end());
    }
    return out;
  }

  void choose(std::size_t i, const std::vector<ClassMatch>& classes, std::size_t k) {
    if (k == classes.size()) {
      step(i + 1);
      return;
    }
    const ClassMatch& m = classes[k];
    std::vector<Vertex> targets = m.to;
    do {
      for (std::size_t j = 0; j < m.from.size(); ++j) work_.emplace_back(m.from[j], targets[j]);
      choose(i, classes, k + 1);
      work_.resize(work_.size() - m.from.size());
    } while (std::next_permutation(targets.begin(), targets.end()));
  }

  const CenteredTypes& ct_;
  const std::function<void(const Permutation&)>& emit_;
  Permutation image_;
  std::vector<std::pair<Vertex, Vertex>> work_;
};

}  // namespace detail

/// Calls `visit` once per automorphism of `t`. Throws AutomorphismOverflow
/// as soon as more than `limit` automorphisms have been found.
inline void for_each_automorphism(const Tree& t, std::size_t limit,
                                  const std::function<void(const Permutation&)>& visit) {
  TypeTable table;
  auto ct = center_types(t, table);
  std::size_t count = 0;
  std::function<void(const Permutation&)> emit = [&](const Permutation& p) {
    if (++count > limit) throw AutomorphismOverflow(limit);
    visit(p);
  };
  detail::AutomorphismWalker(ct, emit).run();
}

inline std::vector<Permutation> enumerate_automorphisms(const Tree& t, std::size_t limit) {
  std::vector<Permutation> out;
  for_each_automorphism(t, limit, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

}  // namespace treesym
