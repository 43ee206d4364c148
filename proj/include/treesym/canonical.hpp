#pragma once

// AHU canonical forms. Every rooted subtree is reduced to an interned type
// id: two subtrees get the same id iff they are isomorphic as rooted trees
// (and, for colored types, by a color-preserving isomorphism). The printable
// parenthesis code is derived from the id on demand.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "treesym/tree.hpp"

namespace treesym {

using TypeId = std::uint32_t;

enum class Label : std::uint8_t { plain = 0, white = 1, black = 2 };

inline Label label_of(const Coloring& c, Vertex v) {
  return c.black(v) ? Label::black : Label::white;
}

/// Balanced-parenthesis code of a rooted isomorphism type.
struct CanonCode {
  std::string text;

  std::size_t length() const noexcept { return text.size(); }
  bool operator==(const CanonCode&) const = default;
  auto operator<=>(const CanonCode&) const = default;
};

/// Interning table for rooted types. Child type ids are always smaller than
/// the id of the type containing them. Not synchronized: use one table per
/// thread or analysis run.
class TypeTable {
 public:
  struct Key {
    Label label = Label::plain;
    std::vector<TypeId> children;  // ascending
    auto operator<=>(const Key&) const = default;
  };

  TypeId intern(Label label, std::vector<TypeId> children) {
    std::sort(children.begin(), children.end());
    Key key{label, std::move(children)};
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    const auto id = static_cast<TypeId>(keys_.size());
    std::size_t size = 1;
    for (TypeId c : key.children) size += sizes_[c];
    sizes_.push_back(size);
    keys_.push_back(key);
    canonical_children_.emplace_back();
    index_.emplace(std::move(key), id);
    return id;
  }

  const Key& key(TypeId id) const { return keys_[id]; }
  std::size_t vertex_count(TypeId id) const { return sizes_[id]; }
  std::size_t size() const noexcept { return keys_.size(); }

  /// Total order on types that does not depend on interning order: by
  /// vertex count, then label, then the canonically sorted child lists.
  int compare(TypeId a, TypeId b) const {
    if (a == b) return 0;
    if (sizes_[a] != sizes_[b]) return sizes_[a] < sizes_[b] ? -1 : 1;
    if (keys_[a].label != keys_[b].label) return keys_[a].label < keys_[b].label ? -1 : 1;
    const auto& ca = canonical_children(a);
    const auto& cb = canonical_children(b);
    const std::size_t common = std::min(ca.size(), cb.size());
    for (std::size_t i = 0; i < common; ++i) {
      if (int r = compare(ca[i], cb[i]); r != 0) return r;
    }
    if (ca.size() != cb.size()) return ca.size() < cb.size() ? -1 : 1;
    return 0;
  }

  bool less(TypeId a, TypeId b) const { return compare(a, b) < 0; }

  /// Parenthesis code; child codes appear in lexicographic order. Colored
  /// types carry a 'B' or 'W' right after their opening parenthesis.
  CanonCode code(TypeId id) const {
    std::unordered_map<TypeId, std::string> memo;
    return CanonCode{render(id, memo)};
  }

 private:
  const std::vector<TypeId>& canonical_children(TypeId id) const {
    auto& slot = canonical_children_[id];
    if (!slot) {
      std::vector<TypeId> sorted = keys_[id].children;
      std::sort(sorted.begin(), sorted.end(), [this](TypeId x, TypeId y) { return less(x, y); });
      slot = std::move(sorted);
    }
    return *slot;
  }

  const std::string& render(TypeId id, std::unordered_map<TypeId, std::string>& memo) const {
    if (auto it = memo.find(id); it != memo.end()) return it->second;
    std::vector<std::string> parts;
    for (TypeId c : keys_[id].children) parts.push_back(render(c, memo));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    if (keys_[id].label == Label::black) out += 'B';
    if (keys_[id].label == Label::white) out += 'W';
    for (const auto& p : parts) out += p;
    out += ')';
    return memo.emplace(id, std::move(out)).first->second;
  }

  std::map<Key, TypeId> index_;
  std::vector<Key> keys_;
  std::vector<std::size_t> sizes_;
  mutable std::vector<std::optional<std::vector<TypeId>>> canonical_children_;
};

/// Rooted type of T^x for every vertex x of `rt`, uncolored.
inline std::vector<TypeId> classify(const RootedTree& rt, TypeTable& table) {
  std::vector<TypeId> type(rt.size());
  auto order = rt.order();
  std::vector<TypeId> kids;
  for (std::size_t i = order.size(); i-- > 0;) {
    Vertex v = order[i];
    kids.clear();
    for (Vertex c : rt.children(v)) kids.push_back(type[c]);
    type[v] = table.intern(Label::plain, kids);
  }
  return type;
}

/// Colored rooted type of T^x for every vertex x.
inline std::vector<TypeId> classify(const RootedTree& rt, TypeTable& table, const Coloring& c) {
  std::vector<TypeId> type(rt.size());
  auto order = rt.order();
  std::vector<TypeId> kids;
  for (std::size_t i = order.size(); i-- > 0;) {
    Vertex v = order[i];
    kids.clear();
    for (Vertex ch : rt.children(v)) kids.push_back(type[ch]);
    type[v] = table.intern(label_of(c, v), kids);
  }
  return type;
}

inline CanonCode canon_code(const RootedTree& rt, Vertex x, TypeTable& table) {
  return table.code(classify(rt, table)[x]);
}

inline CanonCode canon_code(const RootedTree& rt, Vertex x) {
  TypeTable table;
  return canon_code(rt, x, table);
}

/// One similarity class among the children of a vertex.
struct TwinClass {
  TypeId type = 0;
  std::vector<Vertex> members;  // ascending id

  Vertex representative() const { return members.front(); }
  std::size_t multiplicity() const noexcept { return members.size(); }
};

/// Groups `children` by type. Classes come in canonical type order, so the
/// result is the same for isomorphic parents regardless of vertex labels.
inline std::vector<TwinClass> group_twins(std::span<const Vertex> children,
                                          std::span<const TypeId> type, const TypeTable& table) {
  std::vector<TwinClass> classes;
  for (Vertex c : children) {
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const TwinClass& k) { return k.type == type[c]; });
    if (it == classes.end())
      classes.push_back({type[c], {c}});
    else
      it->members.push_back(c);
  }
  for (auto& k : classes) std::sort(k.members.begin(), k.members.end());
  std::sort(classes.begin(), classes.end(), [&](const TwinClass& a, const TwinClass& b) {
    return table.less(a.type, b.type);
  });
  return classes;
}

/// For every vertex, the partition of its children into similarity classes.
struct SimilarityPartition {
  std::vector<std::vector<TwinClass>> classes;  // empty for leaves

  std::span<const TwinClass> at(Vertex v) const { return classes[v]; }
};

inline SimilarityPartition twin_classes(const RootedTree& rt, TypeTable& table) {
  auto type = classify(rt, table);
  SimilarityPartition out;
  out.classes.resize(rt.size());
  for (Vertex v = 0; v < rt.size(); ++v) out.classes[v] = group_twins(rt.children(v), type, table);
  return out;
}

inline SimilarityPartition twin_classes(const RootedTree& rt) {
  TypeTable table;
  return twin_classes(rt, table);
}

/// A tree rooted at its center. For a central edge uv (u < v) the root is u
/// and v is one of u's children; the "u-half" T^u is u with its remaining
/// children, the "v-half" T^v is v's subtree.
struct CenteredTypes {
  Center center;
  RootedTree rooted;
  std::vector<TypeId> type;  // rooted types in `rooted`
  TypeId root_type = 0;      // type of the vertex center, or of the u-half
  std::optional<TypeId> other_half;  // type of the v-half

  /// Children of x once the central edge is cut.
  std::vector<Vertex> children(Vertex x) const {
    auto kids = rooted.children(x);
    std::vector<Vertex> out(kids.begin(), kids.end());
    if (center.is_edge() && x == center.first)
      out.erase(std::find(out.begin(), out.end(), center.second));
    return out;
  }

  bool halves_isomorphic() const { return other_half && *other_half == root_type; }
};

namespace detail {

inline CenteredTypes centered(const Tree& t, TypeTable& table, const Coloring* coloring) {
  Center c = center(t);
  RootedTree rt(t, c.first);
  auto type = coloring ? classify(rt, table, *coloring) : classify(rt, table);
  CenteredTypes out{c, std::move(rt), std::move(type), 0, std::nullopt};
  if (c.is_vertex()) {
    out.root_type = out.type[c.first];
  } else {
    std::vector<TypeId> kids;
    for (Vertex x : out.children(c.first)) kids.push_back(out.type[x]);
    Label label = coloring ? label_of(*coloring, c.first) : Label::plain;
    out.root_type = table.intern(label, kids);
    out.other_half = out.type[c.second];
  }
  return out;
}

}  // namespace detail

inline CenteredTypes center_types(const Tree& t, TypeTable& table) {
  return detail::centered(t, table, nullptr);
}

inline CenteredTypes center_types(const Tree& t, TypeTable& table, const Coloring& c) {
  return detail::centered(t, table, &c);
}

/// Isomorphism type of an unrooted (possibly colored) tree: the center type,
/// or the unordered pair of half types for a central edge.
struct UnrootedType {
  TypeId first = 0;
  std::optional<TypeId> second;
  bool operator==(const UnrootedType&) const = default;
  auto operator<=>(const UnrootedType&) const = default;
};

inline UnrootedType unrooted_type(const CenteredTypes& ct) {
  if (!ct.other_half) return {ct.root_type, std::nullopt};
  return {std::min(ct.root_type, *ct.other_half), std::max(ct.root_type, *ct.other_half)};
}

inline UnrootedType unrooted_type(const Tree& t, TypeTable& table) {
  return unrooted_type(center_types(t, table));
}

inline UnrootedType unrooted_type(const Tree& t, TypeTable& table, const Coloring& c) {
  return unrooted_type(center_types(t, table, c));
}

inline bool is_isomorphic(const Tree& a, const Tree& b, TypeTable& table) {
  if (a.size() != b.size()) return false;
  return unrooted_type(a, table) == unrooted_type(b, table);
}

inline bool is_isomorphic(const Tree& a, const Tree& b) {
  TypeTable table;
  return is_isomorphic(a, b, table);
}

}  // namespace treesym
