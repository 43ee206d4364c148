#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "treesym/tree.hpp"

using namespace treesym;

namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse_edge_list(text);
  } catch (const InputError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no error for input: " << text;
  return 0;
}

}  // namespace

TEST(Parse, SingleEdge) {
  Tree t = parse_edge_list("2\n0 1");
  EXPECT_EQ(t.size(), 2u);
  EXPECT_TRUE(t.adjacent(0, 1));
}

TEST(Parse, SingleVertex) {
  Tree t = parse_edge_list("1\n");
  EXPECT_EQ(t.size(), 1u);
  EXPECT_EQ(t.max_degree(), 0u);
}

TEST(Parse, PathCenteredAtZero) {
  Tree t = parse_edge_list("3\n0 1\n0 2");
  EXPECT_EQ(t.degree(0), 2u);
  EXPECT_EQ(center(t).kind, Center::Kind::vertex);
  EXPECT_EQ(center(t).first, 0u);
}

TEST(Parse, ToleratesCrlfAndBlankLines) {
  Tree t = parse_edge_list("3\r\n\r\n0 1\r\n\n1 2\r\n");
  EXPECT_EQ(t.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(Parse, RoundTrip) {
  Tree t = parse_edge_list("5\n3 1\n0 1\n1 2\n4 2\n");
  EXPECT_EQ(parse_edge_list(to_edge_list(t)).edges(), t.edges());
}

TEST(Parse, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line(""), 1u);
  EXPECT_EQ(error_line("x\n"), 1u);
  EXPECT_EQ(error_line("0\n"), 1u);
  EXPECT_EQ(error_line("3\n0 1\n0 5\n"), 3u);
  EXPECT_EQ(error_line("3\n0 1\n1 1\n"), 3u);
  EXPECT_EQ(error_line("3\n0 1\n1 0\n"), 3u);
  EXPECT_EQ(error_line("3\n0 1\n1 2\n2 0\n"), 4u);
  EXPECT_EQ(error_line("3\n0 1\n1 two\n"), 3u);
  EXPECT_EQ(error_line("3\n0 1 2\n"), 2u);
  EXPECT_EQ(error_line("3\n0 -1\n"), 2u);
}

TEST(Parse, RejectsDisconnected) {
  EXPECT_THROW(parse_edge_list("3\n0 1\n"), InputError);
  EXPECT_THROW(parse_graph_edge_list("4\n0 1\n2 3\n"), InputError);
}

TEST(Parse, GraphAcceptsCycles) {
  Graph g = parse_graph_edge_list("4\n0 1\n1 2\n2 3\n3 0\n");
  EXPECT_EQ(g.edge_count(), 4u);
}

TEST(Center, Paths) {
  EXPECT_EQ(center(parse_edge_list("3\n0 1\n0 2")).first, 0u);
  Center p4 = center(Tree::path(4));
  EXPECT_TRUE(p4.is_edge());
  EXPECT_EQ(p4.first, 1u);
  EXPECT_EQ(p4.second, 2u);
  Center k2 = center(Tree::path(2));
  EXPECT_TRUE(k2.is_edge());
  EXPECT_EQ(k2.first, 0u);
  EXPECT_EQ(k2.second, 1u);
  EXPECT_TRUE(center(Tree::path(1)).is_vertex());
}

TEST(Center, InvariantUnderRelabeling) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng() % 20;
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(rng() % v, v);
    Tree t = Tree::from_edges(n, edges);
    std::vector<Vertex> perm(n);
    for (Vertex v = 0; v < n; ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    Center a = center(t);
    Center b = center(t.relabeled(perm));
    ASSERT_EQ(a.kind, b.kind);
    std::set<Vertex> mapped{perm[a.first], perm[a.second]};
    std::set<Vertex> direct{b.first, b.second};
    EXPECT_EQ(mapped, direct);
  }
}

TEST(Rooted, PathAtCenter) {
  RootedTree rt = root_at(parse_edge_list("3\n0 1\n0 2"), 0);
  EXPECT_EQ(std::vector<Vertex>(rt.children(0).begin(), rt.children(0).end()),
            (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(rt.subtree_size(0), 3u);
  EXPECT_EQ(rt.subtree_size(1), 1u);
  EXPECT_EQ(rt.subtree_size(2), 1u);
  EXPECT_FALSE(rt.parent(0));
  EXPECT_EQ(*rt.parent(2), 0u);
}

TEST(Rooted, SingleVertex) {
  RootedTree rt = root_at(Tree::path(1), 0);
  EXPECT_EQ(rt.size(), 1u);
  EXPECT_TRUE(rt.children(0).empty());
}

TEST(Rooted, ChainSizes) {
  RootedTree rt = root_at(Tree::path(4), 0);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(rt.subtree_size(v), 4 - v);
}

TEST(Rooted, RootOutOfRange) { EXPECT_THROW(root_at(Tree::path(3), 3), std::out_of_range); }

TEST(ColoringBits, RoundTripAndComplement) {
  Coloring c = Coloring::from_bits("1001");
  EXPECT_EQ(c.bits(), "1001");
  EXPECT_EQ(c.black_count(), 2u);
  EXPECT_EQ(c.complement().bits(), "0110");
  EXPECT_THROW(Coloring::from_bits("10a"), InputError);
}

TEST(Dot, MarksBlackVertices) {
  std::string dot = to_dot(Tree::path(2), Coloring::from_bits("10"));
  EXPECT_NE(dot.find("0 [fillcolor=black"), std::string::npos);
  EXPECT_NE(dot.find("1 [fillcolor=white]"), std::string::npos);
  EXPECT_NE(dot.find("0 -- 1;"), std::string::npos);
}
