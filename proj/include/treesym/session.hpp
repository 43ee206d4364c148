#pragma once

#include <cstddef>
#include <vector>

#include "treesym/bignat.hpp"
#include "treesym/canonical.hpp"

namespace treesym {

/// A type table plus per-type memos of the rooted asymmetrizing number and
/// the rooted automorphism group order. Isomorphic subtrees, within one tree
/// or across trees analysed in the same session, are solved once.
class Session {
 public:
  TypeTable& types() noexcept { return types_; }
  const TypeTable& types() const noexcept { return types_; }

  /// a(T^x, x) for a subtree of type `id`:
  /// 2 * prod over twin classes of C(a(class type), multiplicity).
  const BigNat& asym(TypeId id) {
    fill(id);
    return asym_[id];
  }

  /// |Aut(T^x, x)|: prod over twin classes of mult! * |Aut(class type)|^mult.
  const BigNat& aut(TypeId id) {
    fill(id);
    return aut_[id];
  }

 private:
  void fill(TypeId id) {
    // children always have smaller ids, so ascending order is bottom-up
    for (std::size_t t = asym_.size(); t <= id; ++t) {
      const auto& kids = types_.key(static_cast<TypeId>(t)).children;
      BigNat a = 2;
      BigNat g = 1;
      for (std::size_t i = 0; i < kids.size();) {
        std::size_t j = i;
        while (j < kids.size() && kids[j] == kids[i]) ++j;
        const std::size_t mult = j - i;
        a *= binomial(asym_[kids[i]], mult);
        g *= factorial(mult) * boost::multiprecision::pow(aut_[kids[i]], static_cast<unsigned>(mult));
        i = j;
      }
      asym_.push_back(std::move(a));
      aut_.push_back(std::move(g));
    }
  }

  TypeTable types_;
  std::vector<BigNat> asym_;
  std::vector<BigNat> aut_;
};

}  // namespace treesym
