#include <gtest/gtest.h>

#include <random>
#include <set>

#include "naive.hpp"
#include "treesym/corpus.hpp"
#include "treesym/oracle.hpp"

using namespace treesym;

TEST(BruteAsym, SingleVertex) {
  auto r = brute_asym(Tree::path(1));
  EXPECT_EQ(r.total_colorings, 2);
  EXPECT_EQ(r.distinguishing_count, 2);
  EXPECT_EQ(r.orbit_count, 2);
  EXPECT_EQ(r.aut_order, 1);
}

TEST(BruteAsym, Path3) {
  auto r = brute_asym(Tree::path(3));
  EXPECT_EQ(r.total_colorings, 8);
  EXPECT_EQ(r.distinguishing_count, 4);
  EXPECT_EQ(r.orbit_count, 2);
  EXPECT_EQ(r.aut_order, 2);
  EXPECT_TRUE(r.regular_action_holds());
}

TEST(BruteAsym, Claw) {
  auto r = brute_asym(Tree::star(3));
  EXPECT_EQ(r.distinguishing_count, 0);
  EXPECT_EQ(r.orbit_count, 0);
}

TEST(BruteAsym, RejectsLargeTrees) { EXPECT_THROW(brute_asym(Tree::path(17)), std::invalid_argument); }

TEST(BruteMotion, Examples) {
  EXPECT_EQ(brute_motion(Tree::path(3)), Motion::finite(2));
  EXPECT_EQ(brute_motion(Tree::path(4)), Motion::finite(4));
  EXPECT_TRUE(brute_motion(parse_edge_list("7\n0 1\n1 2\n2 3\n2 4\n4 5\n5 6\n")).is_asymmetric());
}

TEST(GraphAut, Examples) {
  EXPECT_EQ(brute_graph_aut(parse_graph_edge_list("4\n0 1\n1 2\n2 3\n3 0\n")).size(), 8u);
  EXPECT_EQ(brute_graph_aut(parse_graph_edge_list("1\n")).size(), 1u);
  EXPECT_EQ(brute_graph_aut(Tree::path(3).as_graph()).size(), 2u);
  EXPECT_EQ(brute_graph_aut(parse_graph_edge_list("4\n0 1\n1 2\n2 3\n3 0\n"), Vertex{0}).size(), 2u);
  EXPECT_THROW(brute_graph_aut(Tree::star(6).as_graph(), std::nullopt, 100), AutomorphismOverflow);
}

TEST(GraphAut, AgreesWithPermutationSearch) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& t : all_trees(n)) {
      auto a = brute_graph_aut(t.as_graph());
      auto b = naive::automorphisms(t);
      EXPECT_EQ(std::set<Permutation>(a.begin(), a.end()), std::set<Permutation>(b.begin(), b.end()));
    }
}

TEST(Oracle, MatchesNaiveOrbits) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    Tree t = naive::random_attach_tree(1 + rng() % 8, rng);
    std::optional<Vertex> pin;
    if (trial % 2) pin = rng() % t.size();
    auto r = brute_asym(t, pin);
    auto expected = naive::orbits(t, pin);
    EXPECT_EQ(r.orbit_count, expected.orbits);
    EXPECT_EQ(r.distinguishing_count, expected.distinguishing);
    OrbitOracle oracle(t, pin);
    auto reps = oracle.distinguishing_orbit_representatives();
    EXPECT_EQ(std::set<OrbitOracle::Mask>(reps.begin(), reps.end()), expected.representatives);
  }
}

TEST(Oracle, RegularActionOnEveryTree) {
  for (std::size_t n = 1; n <= 10; ++n)
    for (const auto& t : all_trees(n)) EXPECT_TRUE(brute_asym(t).regular_action_holds());
}
