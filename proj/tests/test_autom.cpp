#include <gtest/gtest.h>

#include <random>
#include <set>

#include "naive.hpp"
#include "treesym/automorphism.hpp"
#include "treesym/corpus.hpp"

using namespace treesym;

namespace {

// smallest asymmetric tree: a spider with legs of length 1, 2 and 3
Tree asymmetric7() { return parse_edge_list("7\n0 1\n1 2\n2 3\n2 4\n4 5\n5 6\n"); }

bool is_automorphism(const Tree& t, const Permutation& p) {
  for (auto [u, v] : t.edges())
    if (!t.adjacent(p[u], p[v])) return false;
  return std::set<Vertex>(p.begin(), p.end()).size() == t.size();
}

}  // namespace

TEST(AutOrder, Examples) {
  EXPECT_EQ(aut_order(Tree::star(3)), 6);
  EXPECT_EQ(aut_order(Tree::path(4)), 2);
  EXPECT_EQ(aut_order(asymmetric7()), 1);
  EXPECT_EQ(naive::automorphisms(asymmetric7()).size(), 1u);
  EXPECT_EQ(aut_order(Tree::path(1)), 1);
  EXPECT_EQ(aut_order(Tree::path(2)), 2);
}

TEST(AutOrder, LargeStarIsFactorial) { EXPECT_EQ(aut_order(Tree::star(30)), factorial(30)); }

TEST(Motion, Examples) {
  EXPECT_EQ(motion(Tree::path(3)), Motion::finite(2));
  EXPECT_EQ(motion(Tree::path(4)), Motion::finite(4));
  EXPECT_EQ(motion(lobed_extremal(4)), Motion::finite(4));
  EXPECT_EQ(naive::min_motion(Tree::path(3)), 2u);
  EXPECT_EQ(naive::min_motion(Tree::path(4)), 4u);
  EXPECT_TRUE(motion(asymmetric7()).is_asymmetric());
  EXPECT_TRUE(motion(Tree::path(1)).is_asymmetric());
}

TEST(Motion, AsymmetricExceedsEveryFiniteValue) {
  EXPECT_GT(Motion::asymmetric(), Motion::finite(1000000));
  EXPECT_LT(Motion::finite(2), Motion::finite(3));
  EXPECT_EQ(Motion::asymmetric(), Motion::asymmetric());
  EXPECT_THROW(Motion::finite(1), std::invalid_argument);
  EXPECT_THROW(Motion::asymmetric().value(), std::logic_error);
}

TEST(Enumerate, Examples) {
  auto k2 = enumerate_automorphisms(Tree::path(2), 100);
  EXPECT_EQ(std::set<Permutation>(k2.begin(), k2.end()), (std::set<Permutation>{{0, 1}, {1, 0}}));
  auto star = enumerate_automorphisms(Tree::star(3), 100);
  EXPECT_EQ(star.size(), 6u);
  for (const auto& p : star) EXPECT_EQ(p[0], 0u);
  auto p4 = enumerate_automorphisms(Tree::path(4), 100);
  EXPECT_EQ(std::set<Permutation>(p4.begin(), p4.end()),
            (std::set<Permutation>{{0, 1, 2, 3}, {3, 2, 1, 0}}));
}

TEST(Enumerate, LimitIsEnforced) {
  EXPECT_THROW(enumerate_automorphisms(Tree::star(5), 119), AutomorphismOverflow);
  EXPECT_EQ(enumerate_automorphisms(Tree::star(5), 120).size(), 120u);
}

// Every tree up to 8 vertices: order, motion and the automorphism list agree
// with plain permutation search.
TEST(AgainstBruteForce, ExhaustiveSmallTrees) {
  Session session;
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& t : all_trees(n)) {
      auto expected = naive::automorphisms(t);
      auto got = enumerate_automorphisms(t, 1000000);
      EXPECT_EQ(std::set<Permutation>(got.begin(), got.end()),
                std::set<Permutation>(expected.begin(), expected.end()));
      EXPECT_EQ(got.size(), expected.size());
      EXPECT_EQ(aut_order(t, session), expected.size());
      std::size_t m = naive::min_motion(t);
      EXPECT_EQ(motion(t, session), m == 0 ? Motion::asymmetric() : Motion::finite(m));
    }
}

TEST(AgainstBruteForce, RandomLabelings) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    Tree t = naive::random_attach_tree(1 + rng() % 9, rng);
    auto autos = enumerate_automorphisms(t, 1000000);
    EXPECT_EQ(autos.size(), naive::automorphisms(t).size());
    for (const auto& p : autos) EXPECT_TRUE(is_automorphism(t, p));
  }
}

TEST(Motion, AlwaysEvenWhenFinite) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    Tree t = naive::random_attach_tree(1 + rng() % 40, rng);
    Motion m = motion(t);
    if (m.is_finite()) {
      EXPECT_EQ(m.value() % 2, 0u);
    }
  }
}
