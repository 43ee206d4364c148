#pragma once

// Tree families and the batch checks run over them.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "treesym/asymmetrizing.hpp"
#include "treesym/automorphism.hpp"
#include "treesym/bignat.hpp"
#include "treesym/canonical.hpp"
#include "treesym/coloring.hpp"
#include "treesym/session.hpp"
#include "treesym/tree.hpp"

namespace treesym {

enum class Family { random_prufer, all_trees, kary, caterpillar, lobed_extremal, spider };

inline constexpr std::size_t kAllTreesMax = 12;

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::random_prufer: return "random-prufer";
    case Family::all_trees: return "all-trees";
    case Family::kary: return "kary";
    case Family::caterpillar: return "caterpillar";
    case Family::lobed_extremal: return "lobed-extremal";
    case Family::spider: return "spider";
  }
  return "?";
}

inline Family parse_family(std::string_view name) {
  for (Family f : {Family::random_prufer, Family::all_trees, Family::kary, Family::caterpillar,
                   Family::lobed_extremal, Family::spider})
    if (family_name(f) == name) return f;
  if (name == "random-prüfer") return Family::random_prufer;
  throw std::invalid_argument("unknown tree family: " + std::string(name));
}

/// Parameters per family:
///   random-prufer   `count` uniform labeled trees on `n` vertices
///   all-trees       every unlabeled tree on `n` vertices (n <= 12)
///   kary            complete `arity`-ary tree on `n` vertices, heap order
///   caterpillar     spine of `n` vertices, `arity` pendant leaves on each
///   lobed-extremal  root with 2^(m/2) pendant paths of m/2 vertices (m even)
///   spider          `arity` legs of `n` vertices joined at a center
struct CorpusSpec {
  Family family = Family::random_prufer;
  std::size_t n = 1;
  std::size_t arity = 2;
  std::size_t m = 2;
  std::size_t count = 1;
  std::uint64_t seed = 0;

  void validate() const {
    switch (family) {
      case Family::random_prufer:
      case Family::kary:
        if (n == 0) throw std::invalid_argument("n must be positive");
        if (family == Family::kary && arity == 0) throw std::invalid_argument("arity must be positive");
        break;
      case Family::all_trees:
        if (n == 0 || n > kAllTreesMax)
          throw std::invalid_argument("all-trees supports 1 <= n <= " + std::to_string(kAllTreesMax));
        break;
      case Family::caterpillar:
        if (n == 0) throw std::invalid_argument("caterpillar spine must be non-empty");
        break;
      case Family::lobed_extremal:
        if (m < 2 || m % 2 != 0) throw std::invalid_argument("lobed-extremal requires even m >= 2");
        if (m > 40) throw std::invalid_argument("lobed-extremal supports m <= 40");
        break;
      case Family::spider:
        if (n == 0 || arity == 0) throw std::invalid_argument("spider needs positive leg length and arity");
        break;
    }
  }
};

/// Labeled tree from a Prüfer sequence over 0..n-1 (length n - 2).
inline Tree prufer_decode(std::size_t n, const std::vector<Vertex>& code) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (n == 1) return Tree::from_edges(1, {});
  if (code.size() != n - 2) throw std::invalid_argument("Prüfer sequence must have length n - 2");
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : code) {
    if (v >= n) throw std::invalid_argument("Prüfer entry out of range");
    ++degree[v];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);
  std::vector<Edge> edges;
  for (Vertex v : code) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) leaves.push(v);
  }
  Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Tree::from_edges(n, edges);
}

/// Uniform random labeled tree. Draws `rng() % n` per entry so that output
/// depends only on the mt19937_64 stream.
inline Tree random_tree(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> code(n >= 2 ? n - 2 : 0);
  for (auto& v : code) v = static_cast<Vertex>(rng() % n);
  return prufer_decode(n, code);
}

/// Tree from a level sequence in preorder (levels[0] == 0 is the root).
inline Tree from_level_sequence(const std::vector<std::size_t>& levels) {
  std::vector<Edge> edges;
  std::vector<Vertex> last_at_level;
  for (Vertex i = 0; i < levels.size(); ++i) {
    const std::size_t l = levels[i];
    if (l > 0) edges.emplace_back(last_at_level[l - 1], i);
    if (last_at_level.size() <= l) last_at_level.resize(l + 1);
    last_at_level[l] = i;
  }
  return Tree::from_edges(levels.size(), edges);
}

/// Every unlabeled tree on n vertices, once each. Rooted trees come from the
/// Beyer-Hedetniemi successor on canonical level sequences; a rooted tree is
/// kept iff its root is the center vertex, or, for a central edge, the end
/// whose rooted type is canonically larger (either end when they tie).
inline void for_each_free_tree(std::size_t n, const std::function<void(const Tree&)>& visit) {
  if (n == 0 || n > kAllTreesMax)
    throw std::invalid_argument("all-trees supports 1 <= n <= " + std::to_string(kAllTreesMax));
  std::vector<std::size_t> levels(n);
  for (std::size_t i = 0; i < n; ++i) levels[i] = i;
  TypeTable table;
  while (true) {
    Tree t = from_level_sequence(levels);
    Center c = center(t);
    bool keep = false;
    if (c.is_vertex()) {
      keep = c.first == 0;
    } else if (c.first == 0 || c.second == 0) {
      const Vertex other = c.first == 0 ? c.second : c.first;
      const TypeId here = classify(RootedTree(t, 0), table)[0];
      const TypeId there = classify(RootedTree(t, other), table)[other];
      keep = table.compare(here, there) >= 0;
    }
    if (keep) visit(t);

    std::size_t p = n;
    for (std::size_t i = n; i-- > 1;)
      if (levels[i] > 1) {
        p = i;
        break;
      }
    if (p == n) break;
    std::size_t q = p;
    while (levels[q] != levels[p] - 1) --q;
    for (std::size_t i = p; i < n; ++i) levels[i] = levels[i - (p - q)];
  }
}

inline std::vector<Tree> all_trees(std::size_t n) {
  std::vector<Tree> out;
  for_each_free_tree(n, [&](const Tree& t) { out.push_back(t); });
  return out;
}

/// Root 0 with 2^(m/2) pendant paths of m/2 vertices each.
inline Tree lobed_extremal(std::size_t m) {
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("lobed-extremal requires even m >= 2");
  const std::size_t half = m / 2;
  const std::size_t lobes = std::size_t{1} << half;
  std::vector<Edge> edges;
  Vertex next = 1;
  for (std::size_t l = 0; l < lobes; ++l) {
    Vertex prev = 0;
    for (std::size_t k = 0; k < half; ++k) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Tree::from_edges(next, edges);
}

inline Tree kary_tree(std::size_t n, std::size_t arity) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back((v - 1) / arity, v);
  return Tree::from_edges(n, edges);
}

inline Tree caterpillar(std::size_t spine, std::size_t legs) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < spine; ++v) edges.emplace_back(v - 1, v);
  Vertex next = spine;
  for (Vertex v = 0; v < spine; ++v)
    for (std::size_t l = 0; l < legs; ++l) edges.emplace_back(v, next++);
  return Tree::from_edges(next, edges);
}

inline Tree spider(std::size_t legs, std::size_t leg_length) {
  std::vector<Edge> edges;
  Vertex next = 1;
  for (std::size_t l = 0; l < legs; ++l) {
    Vertex prev = 0;
    for (std::size_t k = 0; k < leg_length; ++k) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Tree::from_edges(next, edges);
}

/// Deterministic for a given spec.
inline std::vector<Tree> generate(const CorpusSpec& spec) {
  spec.validate();
  switch (spec.family) {
    case Family::random_prufer: {
      std::mt19937_64 rng(spec.seed);
      std::vector<Tree> out;
      for (std::size_t i = 0; i < spec.count; ++i) out.push_back(random_tree(spec.n, rng));
      return out;
    }
    case Family::all_trees: return all_trees(spec.n);
    case Family::kary: return {kary_tree(spec.n, spec.arity)};
    case Family::caterpillar: return {caterpillar(spec.n, spec.arity)};
    case Family::lobed_extremal: return {lobed_extremal(spec.m)};
    case Family::spider: return {spider(spec.arity, spec.n)};
  }
  return {};
}

/// 2^(m/2), saturating at 2^62 (larger than any degree we can hold).
inline std::uint64_t degree_threshold(std::size_t m) {
  const std::size_t e = m / 2;
  return e >= 62 ? (std::uint64_t{1} << 62) : (std::uint64_t{1} << e);
}

enum class CheckOutcome { passed, failed, not_applicable };

inline std::string_view outcome_name(CheckOutcome o) {
  switch (o) {
    case CheckOutcome::passed: return "pass";
    case CheckOutcome::failed: return "fail";
    case CheckOutcome::not_applicable: return "hypothesis not met";
  }
  return "?";
}

struct TreeRecord {
  std::size_t index = 0;
  std::size_t n = 0;
  std::size_t max_degree = 0;
  Motion motion = Motion::asymmetric();
  BigNat aut_order;
  BigNat asym;
  CheckOutcome distinguishable = CheckOutcome::not_applicable;  // degree bound => a(T) > 0, verified coloring
  CheckOutcome rooted_bound = CheckOutcome::not_applicable;     // a(T, w) >= 2 * 2^(m/2)
  CheckOutcome cameron = CheckOutcome::not_applicable;          // |Aut| * a <= 2^n
  std::size_t rooted_bound_roots = 0;                          // roots meeting the hypothesis
  std::vector<std::string> violations;
};

struct SuiteReport {
  std::vector<TreeRecord> records;
  std::size_t trees = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t not_applicable = 0;
  std::vector<std::size_t> counterexamples;  // indices into records

  bool clean() const { return counterexamples.empty(); }
};

/// Checks one tree:
///  - finite motion m and max degree <= 2^(m/2): a(T) > 0 and the
///    constructed coloring verifies;
///  - additionally, for every root w with deg(w) < 2^(m/2):
///    a(T, w) >= 2 * 2^(m/2);
///  - a(T) > 0: |Aut(T)| * a(T) <= 2^n, with equality when asymmetric.
/// Asymmetric trees meet every degree hypothesis; they pass when a = 2^n.
inline TreeRecord check_tree(const Tree& t, Session& session, std::size_t index = 0) {
  TreeRecord r;
  r.index = index;
  r.n = t.size();
  r.max_degree = t.max_degree();
  r.motion = motion(t, session);
  r.aut_order = aut_order(t, session);
  r.asym = asym_unrooted(t, session);
  auto fail = [&](std::string why) { r.violations.push_back(std::move(why)); };

  if (r.motion.is_asymmetric()) {
    if (r.asym != pow2(r.n)) fail("asymmetric tree with a(T) != 2^n");
    if (r.aut_order != 1) fail("asymmetric tree with |Aut(T)| != 1");
    r.distinguishable = r.asym > 0 ? CheckOutcome::passed : CheckOutcome::failed;
  } else {
    const std::size_t m = r.motion.value();
    const std::uint64_t threshold = degree_threshold(m);
    if (r.max_degree <= threshold) {
      r.distinguishable = CheckOutcome::passed;
      if (r.asym == 0) {
        fail("degree bound holds but a(T) = 0");
      } else {
        auto c = construct_distinguishing(t, session);
        if (!c || !verify_distinguishing(t, *c, std::nullopt, session.types()))
          fail("degree bound holds but no verified distinguishing coloring");
      }
      r.rooted_bound = CheckOutcome::passed;
      const BigNat required = 2 * BigNat(threshold);
      for (Vertex w = 0; w < t.size(); ++w) {
        if (t.degree(w) >= threshold) continue;
        ++r.rooted_bound_roots;
        const BigNat aw = asym_rooted(RootedTree(t, w), session);
        if (aw < required)
          fail("a(T, " + std::to_string(w) + ") = " + to_decimal(aw) + " < " + to_decimal(required));
      }
      if (r.rooted_bound_roots == 0) r.rooted_bound = CheckOutcome::not_applicable;
    }
  }
  if (r.asym > 0) {
    const BigNat product = r.aut_order * r.asym;
    const BigNat bound = pow2(r.n);
    r.cameron = CheckOutcome::passed;
    if (product > bound) fail("|Aut| * a = " + to_decimal(product) + " > 2^n");
    if (r.motion.is_asymmetric() && product != bound) fail("asymmetric tree without equality |Aut| * a = 2^n");
  }
  if (!r.violations.empty()) {
    for (auto* o : {&r.distinguishable, &r.rooted_bound, &r.cameron})
      if (*o == CheckOutcome::passed) *o = CheckOutcome::failed;
  }
  return r;
}

inline SuiteReport run_theorem_suite(const std::vector<Tree>& trees, Session& session) {
  SuiteReport report;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    TreeRecord r = check_tree(trees[i], session, i);
    ++report.trees;
    if (!r.violations.empty()) {
      ++report.failed;
      report.counterexamples.push_back(i);
    } else if (r.distinguishable == CheckOutcome::not_applicable &&
               r.cameron == CheckOutcome::not_applicable) {
      ++report.not_applicable;
    } else {
      ++report.passed;
    }
    report.records.push_back(std::move(r));
  }
  return report;
}

inline SuiteReport run_theorem_suite(const std::vector<Tree>& trees) {
  Session session;
  return run_theorem_suite(trees, session);
}

/// The local condition mu(x) <= a(T^x, x) for every vertex w and neighbor x,
/// where T^x is the component of T - wx containing x and mu(x) counts the
/// neighbors of w whose branches are isomorphic to T^x.
struct ConjectureResult {
  bool local_condition = true;
  bool distinguishable = false;
  bool consistent() const { return local_condition == distinguishable; }

  // first failing (w, x) when the local condition fails
  std::optional<Vertex> w;
  std::optional<Vertex> x;
  std::size_t multiplicity = 0;
  BigNat branch_asym;
};

inline ConjectureResult conjecture_check(const Tree& t, Session& session) {
  ConjectureResult out;
  out.distinguishable = asym_unrooted(t, session) > 0;
  for (Vertex w = 0; w < t.size() && out.local_condition; ++w) {
    RootedTree rt(t, w);
    auto type = classify(rt, session.types());
    for (const auto& cls : group_twins(rt.children(w), type, session.types())) {
      const BigNat a = session.asym(cls.type);
      if (a < cls.multiplicity()) {
        out.local_condition = false;
        out.w = w;
        out.x = cls.representative();
        out.multiplicity = cls.multiplicity();
        out.branch_asym = a;
        break;
      }
    }
  }
  return out;
}

inline ConjectureResult conjecture_check(const Tree& t) {
  Session session;
  return conjecture_check(t, session);
}

}  // namespace treesym
