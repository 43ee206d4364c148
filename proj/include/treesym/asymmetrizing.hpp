#pragma once

// Asymmetrizing numbers: the number of pairwise inequivalent distinguishing
// sets of a rooted or unrooted finite tree.

#include <stdexcept>

#include "treesym/automorphism.hpp"
#include "treesym/bignat.hpp"
#include "treesym/canonical.hpp"
#include "treesym/session.hpp"
#include "treesym/tree.hpp"

namespace treesym {

/// a(T, w) = 2 * prod over twin classes x of the root's children of
/// C(a(x), mu(x)). Zero iff (T, w) admits no distinguishing set.
inline BigNat asym_rooted(const RootedTree& rt, Session& session) {
  auto type = classify(rt, session.types());
  return session.asym(type[rt.root()]);
}

inline BigNat asym_rooted(const RootedTree& rt) {
  Session session;
  return asym_rooted(rt, session);
}

/// a(T). A central vertex w gives a(T, w). A central edge uv gives
/// C(a(T^u, u), 2) when the halves are isomorphic (every non-identity
/// automorphism outside the half stabilizers swaps u and v) and
/// a(T^u, u) * a(T^v, v) otherwise, where Aut(T) is the direct product of
/// the two rooted half groups.
inline BigNat asym_unrooted(const Tree& t, Session& session) {
  auto ct = center_types(t, session.types());
  if (!ct.other_half) return session.asym(ct.root_type);
  if (ct.halves_isomorphic()) return binomial(session.asym(ct.root_type), 2);
  return session.asym(ct.root_type) * session.asym(*ct.other_half);
}

inline BigNat asym_unrooted(const Tree& t) {
  Session session;
  return asym_unrooted(t, session);
}

inline bool is_2_distinguishable(const Tree& t, Session& session) {
  return asym_unrooted(t, session) > 0;
}

inline bool is_2_distinguishable(const Tree& t) {
  Session session;
  return is_2_distinguishable(t, session);
}

/// |Aut(T)| * a(T) against 2^n.
struct CameronCheck {
  bool holds = false;
  BigNat aut_order;
  BigNat asym;
  BigNat product;  // aut_order * asym
  BigNat bound;    // 2^n

  bool tight() const { return product == bound; }
};

/// Throws std::invalid_argument when T is not 2-distinguishable, which is
/// outside the inequality's hypothesis.
inline CameronCheck cameron_check(const Tree& t, Session& session) {
  CameronCheck out;
  out.asym = asym_unrooted(t, session);
  if (out.asym == 0)
    throw std::invalid_argument("cameron_check requires a 2-distinguishable tree");
  out.aut_order = aut_order(t, session);
  out.product = out.aut_order * out.asym;
  out.bound = pow2(t.size());
  out.holds = out.product <= out.bound;
  return out;
}

inline CameronCheck cameron_check(const Tree& t) {
  Session session;
  return cameron_check(t, session);
}

}  // namespace treesym
