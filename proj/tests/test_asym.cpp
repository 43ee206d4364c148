#include <gtest/gtest.h>

#include <random>

#include "naive.hpp"
#include "treesym/asymmetrizing.hpp"
#include "treesym/corpus.hpp"

using namespace treesym;

namespace {

Tree asymmetric7() { return parse_edge_list("7\n0 1\n1 2\n2 3\n2 4\n4 5\n5 6\n"); }

}  // namespace

TEST(Rooted, SingleVertex) { EXPECT_EQ(asym_rooted(root_at(Tree::path(1), 0)), 2); }

TEST(Rooted, PathAtCenter) {
  EXPECT_EQ(asym_rooted(root_at(Tree::path(3), 1)), 2);
  EXPECT_EQ(naive::orbits(Tree::path(3), 1).orbits, 2u);
}

TEST(Rooted, ClawAtCenter) {
  EXPECT_EQ(asym_rooted(root_at(Tree::star(3), 0)), 0);
  EXPECT_EQ(naive::orbits(Tree::star(3), 0).orbits, 0u);
}

TEST(Unrooted, AnchorValues) {
  EXPECT_EQ(asym_unrooted(Tree::path(1)), 2);
  EXPECT_EQ(asym_unrooted(Tree::path(2)), 1);
}

TEST(Unrooted, EdgeCentered) {
  EXPECT_EQ(asym_rooted(root_at(Tree::path(2), 0)), 4);
  EXPECT_EQ(asym_unrooted(Tree::path(4)), 6);
  EXPECT_EQ(naive::orbits(Tree::path(4)).orbits, 6u);
  EXPECT_EQ(asym_unrooted(Tree::path(6)), 28);
  EXPECT_EQ(naive::orbits(Tree::path(6)).orbits, 28u);
}

TEST(Unrooted, EdgeCenterWithDifferentHalves) {
  // central edge 1-2: half at 1 is a cherry, half at 2 a chain of three
  Tree t = parse_edge_list("7\n1 0\n1 3\n1 2\n2 4\n4 5\n5 6\n");
  ASSERT_TRUE(center(t).is_edge());
  EXPECT_EQ(asym_unrooted(t), naive::orbits(t).orbits);
}

TEST(Distinguishable, Examples) {
  EXPECT_FALSE(is_2_distinguishable(Tree::star(3)));
  EXPECT_TRUE(is_2_distinguishable(Tree::path(4)));
  EXPECT_TRUE(is_2_distinguishable(asymmetric7()));
  EXPECT_EQ(asym_unrooted(asymmetric7()), pow2(7));
}

TEST(Cameron, Examples) {
  auto k2 = cameron_check(Tree::path(2));
  EXPECT_TRUE(k2.holds);
  EXPECT_EQ(k2.product, 2);
  EXPECT_EQ(k2.bound, 4);
  auto asym = cameron_check(asymmetric7());
  EXPECT_TRUE(asym.holds);
  EXPECT_TRUE(asym.tight());
  EXPECT_EQ(asym.product, 128);
  auto p4 = cameron_check(Tree::path(4));
  EXPECT_EQ(p4.product, 12);
  EXPECT_EQ(p4.bound, 16);
  EXPECT_TRUE(p4.holds);
  EXPECT_THROW(cameron_check(Tree::star(3)), std::invalid_argument);
}

// Every tree on up to 8 vertices, every root: rooted and unrooted counts match
// the naive orbit count.
TEST(AgainstBruteForce, ExhaustiveSmallTrees) {
  Session session;
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& t : all_trees(n)) {
      auto free = naive::orbits(t);
      EXPECT_EQ(asym_unrooted(t, session), free.orbits) << to_edge_list(t);
      EXPECT_EQ(free.distinguishing, free.orbits * free.group);
      for (Vertex w = 0; w < n; ++w)
        EXPECT_EQ(asym_rooted(root_at(t, w), session), naive::orbits(t, w).orbits);
    }
}

TEST(Invariance, RelabelingPreservesCounts) {
  std::mt19937_64 rng(29);
  Session session;
  for (int trial = 0; trial < 300; ++trial) {
    Tree t = naive::random_attach_tree(1 + rng() % 30, rng);
    auto perm = naive::random_permutation(t.size(), rng);
    EXPECT_EQ(asym_unrooted(t, session), asym_unrooted(t.relabeled(perm), session));
  }
}

TEST(Cameron, HoldsOnRandomTrees) {
  std::mt19937_64 rng(31);
  Session session;
  for (int trial = 0; trial < 500; ++trial) {
    Tree t = naive::random_attach_tree(1 + rng() % 40, rng);
    if (asym_unrooted(t, session) == 0) continue;
    auto c = cameron_check(t, session);
    EXPECT_TRUE(c.holds);
    if (aut_order(t, session) == 1) {
      EXPECT_TRUE(c.tight());
    }
  }
}
