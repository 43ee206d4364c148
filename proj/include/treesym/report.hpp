#pragma once

// JSON forms of the analysis results. Big numbers are decimal strings;
// every top-level document carries "schema": 1.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "treesym/asymmetrizing.hpp"
#include "treesym/automorphism.hpp"
#include "treesym/canonical.hpp"
#include "treesym/coloring.hpp"
#include "treesym/corpus.hpp"
#include "treesym/oracle.hpp"
#include "treesym/session.hpp"
#include "treesym/tree.hpp"
#include "treesym/treelike.hpp"

namespace treesym {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline json motion_json(const Motion& m) {
  if (m.is_asymmetric()) return "asymmetric";
  return m.value();
}

inline json center_json(const Center& c) {
  if (c.is_vertex()) return {{"kind", "vertex"}, {"vertices", {c.first}}};
  return {{"kind", "edge"}, {"vertices", {c.first, c.second}}};
}

inline json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (auto [u, v] : edges) out.push_back({u, v});
  return out;
}

struct AnalysisReport {
  std::size_t n = 0;
  std::size_t max_degree = 0;
  Center center;
  std::string canon;  // parenthesis code at the center (u-half;v-half for an edge)
  Motion motion = Motion::asymmetric();
  BigNat aut_order;
  BigNat asym;
  bool distinguishable = false;
  std::optional<CameronCheck> cameron;
  bool degree_bound = false;  // max degree <= 2^(m/2); vacuously true when asymmetric
  std::vector<std::pair<Vertex, BigNat>> rooted;
  std::vector<std::string> notes;
};

inline AnalysisReport analyze(const Tree& t, const std::vector<Vertex>& roots, Session& session) {
  AnalysisReport r;
  r.n = t.size();
  r.max_degree = t.max_degree();
  auto ct = center_types(t, session.types());
  r.center = ct.center;
  r.canon = session.types().code(ct.root_type).text;
  if (ct.other_half) r.canon += ";" + session.types().code(*ct.other_half).text;
  r.motion = motion(t, session);
  r.aut_order = aut_order(t, session);
  r.asym = asym_unrooted(t, session);
  r.distinguishable = r.asym > 0;
  if (r.distinguishable) r.cameron = cameron_check(t, session);
  if (r.motion.is_asymmetric()) {
    r.degree_bound = true;
    r.notes.push_back("asymmetric: motion exceeds every bound, degree condition holds vacuously");
  } else {
    r.degree_bound = r.max_degree <= degree_threshold(r.motion.value());
  }
  for (Vertex w : roots) {
    if (w >= t.size()) throw std::out_of_range("root " + std::to_string(w) + " out of range");
    r.rooted.emplace_back(w, asym_rooted(RootedTree(t, w), session));
  }
  return r;
}

inline json to_json(const CameronCheck& c) {
  return {{"holds", c.holds},
          {"aut_times_a", to_decimal(c.product)},
          {"two_pow_n", to_decimal(c.bound)},
          {"tight", c.tight()}};
}

inline json to_json(const AnalysisReport& r) {
  json out = {{"schema", kSchemaVersion},
              {"n", r.n},
              {"max_degree", r.max_degree},
              {"center", center_json(r.center)},
              {"canon", r.canon},
              {"motion", motion_json(r.motion)},
              {"aut_order", to_decimal(r.aut_order)},
              {"a", to_decimal(r.asym)},
              {"distinguishable", r.distinguishable},
              {"degree_bound", r.degree_bound},
              {"cameron", r.cameron ? to_json(*r.cameron) : json(nullptr)},
              {"notes", r.notes}};
  if (!r.rooted.empty()) {
    json roots = json::array();
    for (const auto& [w, a] : r.rooted) roots.push_back({{"root", w}, {"a", to_decimal(a)}});
    out["roots"] = roots;
  }
  return out;
}

inline json to_json(const OrbitReport& r) {
  return {{"schema", kSchemaVersion},
          {"pinned", r.pinned ? json(*r.pinned) : json(nullptr)},
          {"total_colorings", to_decimal(r.total_colorings)},
          {"distinguishing_count", to_decimal(r.distinguishing_count)},
          {"orbit_count", to_decimal(r.orbit_count)},
          {"aut_order", to_decimal(r.aut_order)},
          {"regular_action", r.regular_action_holds()}};
}

inline json to_json(const TreeRecord& r) {
  return {{"index", r.index},
          {"n", r.n},
          {"max_degree", r.max_degree},
          {"motion", motion_json(r.motion)},
          {"aut_order", to_decimal(r.aut_order)},
          {"a", to_decimal(r.asym)},
          {"checks",
           {{"distinguishable", outcome_name(r.distinguishable)},
            {"rooted_bound", outcome_name(r.rooted_bound)},
            {"cameron", outcome_name(r.cameron)}}},
          {"violations", r.violations}};
}

inline json to_json(const SuiteReport& s) {
  json records = json::array();
  for (const auto& r : s.records) records.push_back(to_json(r));
  return {{"trees", s.trees},
          {"passed", s.passed},
          {"failed", s.failed},
          {"not_applicable", s.not_applicable},
          {"counterexamples", s.counterexamples},
          {"records", records}};
}

inline json to_json(const ConjectureResult& c) {
  json out = {{"local_condition", c.local_condition},
              {"distinguishable", c.distinguishable},
              {"consistent", c.consistent()}};
  if (c.w) {
    out["witness"] = {{"w", *c.w},
                      {"x", *c.x},
                      {"multiplicity", c.multiplicity},
                      {"branch_a", to_decimal(c.branch_asym)}};
  }
  return out;
}

inline json to_json(const RootedGraph& g, const TreelikeReport& t, const TreelikeColoring& c) {
  json witnesses = json::array();
  for (const auto& w : t.witness) witnesses.push_back(w ? json(*w) : json(nullptr));
  json sizes = json::array();
  for (const auto& comp : c.forest.components) sizes.push_back(comp.size());
  return {{"schema", kSchemaVersion},
          {"n", g.size()},
          {"root", g.root()},
          {"treelike", t.all_vertices},
          {"treelike_root_exempt", t.all_but_root},
          {"witness", witnesses},
          {"forest_edges", edges_json(c.forest.edges)},
          {"component_sizes", sizes},
          {"coloring", c.coloring ? json(c.coloring->bits()) : json(nullptr)}};
}

}  // namespace treesym
