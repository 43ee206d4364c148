#pragma once

// Exact natural-number arithmetic for asymmetrizing numbers, automorphism
// group orders and coloring ranks. Values routinely exceed 2^64 for trees
// with more than a few dozen vertices.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace treesym {

using BigNat = boost::multiprecision::cpp_int;

inline BigNat pow2(std::size_t exponent) {
  BigNat r = 1;
  r <<= exponent;
  return r;
}

inline BigNat factorial(std::size_t n) {
  BigNat r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Binomial coefficient C(a, k) with C(a, k) = 0 whenever k > a.
inline BigNat binomial(const BigNat& a, std::size_t k) {
  if (a < k) return 0;
  BigNat r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    r *= a - i;
    r /= i + 1;  // exact: r is C(a, i + 1) here
  }
  return r;
}

inline std::string to_decimal(const BigNat& x) { return x.str(); }

/// Decodes `rank` in the combinatorial number system of degree k: returns
/// the unique k-subset {c_1 < ... < c_k} of naturals with
/// rank = C(c_1, 1) + ... + C(c_k, k). Elements come back ascending.
/// The caller bounds the universe: the result lies inside [0, a) iff
/// rank < C(a, k).
inline std::vector<BigNat> unrank_subset(BigNat rank, std::size_t k) {
  std::vector<BigNat> out(k);
  BigNat upper;  // exclusive bound for the next (smaller) element
  bool bounded = false;
  for (std::size_t i = k; i >= 1; --i) {
    // largest c >= i - 1 with C(c, i) <= rank
    BigNat lo = i - 1;
    BigNat hi;
    if (bounded) {
      hi = upper - 1;
    } else {
      hi = lo + 1;
      while (binomial(hi, i) <= rank) hi = (hi - lo) * 2 + lo;
      hi -= 1;
    }
    while (lo < hi) {
      BigNat mid = (lo + hi + 1) / 2;
      if (binomial(mid, i) <= rank)
        lo = mid;
      else
        hi = mid - 1;
    }
    out[i - 1] = lo;
    rank -= binomial(lo, i);
    upper = lo;
    bounded = true;
  }
  return out;
}

/// Inverse of unrank_subset; `subset` must be strictly ascending.
inline BigNat rank_subset(const std::vector<BigNat>& subset) {
  BigNat r = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i > 0 && !(subset[i - 1] < subset[i]))
      throw std::invalid_argument("rank_subset: elements must be strictly ascending");
    r += binomial(subset[i], i + 1);
  }
  return r;
}

}  // namespace treesym
