#include <gtest/gtest.h>

#include <random>

#include "p2pack/graph.hpp"
#include "support/brute.hpp"

using namespace p2pack;

namespace {

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

}  // namespace

TEST(Graph, DeduplicatesEdgesInBothOrientations) {
  const Graph g(3, {{0, 1}, {1, 0}, {1, 2}, {0, 1}});
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_FALSE(g.has_edge(0, 2));
  EXPECT_EQ(g.degree(1), 2u);
}

TEST(Graph, RejectsSelfLoopsAndBadIds) {
  EXPECT_THROW(Graph(3, {{1, 1}}), InputError);
  EXPECT_THROW(Graph(3, {{0, 3}}), InputError);
  const Graph g(2);
  EXPECT_THROW(g.neighbors(2), InputError);
}

TEST(Graph, NeighborsOfSet) {
  const Graph p3 = path_graph(3);
  EXPECT_EQ(neighbors_of_set(p3, {1}), (VertexSet{0, 2}));
  EXPECT_EQ(neighbors_of_set(p3, {0, 1, 2}), VertexSet{});
  const Graph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  EXPECT_EQ(neighbors_of_set(c6, {0, 3}), (VertexSet{1, 2, 4, 5}));
  EXPECT_THROW(neighbors_of_set(p3, {7}), InputError);
}

TEST(Graph, ComponentsOutside) {
  const Graph p4 = path_graph(4);
  const auto comps = components_outside(p4, {1});
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], VertexSet{0});
  EXPECT_EQ(comps[1], (VertexSet{2, 3}));
  EXPECT_TRUE(components_outside(p4, {0, 1, 2, 3}).empty());

  // 2x3 grid, vertex (r, c) = 3r + c; drop the centre column.
  const Graph grid(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
  const auto sides = components_outside(grid, {1, 4});
  ASSERT_EQ(sides.size(), 2u);
  EXPECT_EQ(sides[0], (VertexSet{0, 3}));
  EXPECT_EQ(sides[1], (VertexSet{2, 5}));
}

TEST(Graph, ComponentsPartitionTheRemainder) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const Graph g = brute::random_graph(rng, 12, 0.2);
    VertexSet removed;
    for (Vertex v = 0; v < 12; v += 3 + static_cast<Vertex>(t % 2)) removed.insert(v);
    VertexSet seen;
    for (const auto& comp : components_outside(g, removed)) {
      for (Vertex v : comp) {
        EXPECT_FALSE(removed.contains(v));
        EXPECT_TRUE(seen.insert(v).second);
        for (Vertex w : g.neighbors(v))
          EXPECT_TRUE(removed.contains(w) || comp.contains(w));
      }
    }
    EXPECT_EQ(seen.size() + removed.size(), 12u);
  }
}

TEST(Graph, InducedSubgraphRenumbers) {
  const Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  const auto sub = induced_subgraph(g, {1, 2, 4});
  EXPECT_EQ(sub.graph.vertex_count(), 3u);
  EXPECT_EQ(sub.original_id, (std::vector<Vertex>{1, 2, 4}));
  EXPECT_EQ(sub.graph.edges(), (std::vector<Edge>{{0, 1}}));
}

TEST(P2Path, NormalisesEndpoints) {
  const P2Path p(5, 2, 1);
  EXPECT_EQ(p.e1, 1u);
  EXPECT_EQ(p.e2, 5u);
  EXPECT_EQ(p.min_vertex(), 1u);
  EXPECT_EQ(P2Path(1, 2, 5), p);
  EXPECT_EQ(P2Path(4, 0, 3).min_vertex(), 0u);
}

TEST(Packing, RejectsOverlap) {
  Packing p{P2Path(0, 1, 2)};
  EXPECT_THROW(p.add(P2Path(2, 3, 4)), InputError);
  EXPECT_THROW(p.add(P2Path(3, 3, 4)), InputError);
  p.add(P2Path(3, 4, 5));
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.midpoints(), (VertexSet{1, 4}));
  p.remove(P2Path(0, 1, 2));
  EXPECT_EQ(p.covered(), (VertexSet{3, 4, 5}));
  EXPECT_THROW(p.remove(P2Path(0, 1, 2)), InputError);
}

TEST(Packing, ValidityAndMaximality) {
  const Graph p6 = path_graph(6);
  EXPECT_TRUE(is_valid_packing(p6, Packing{P2Path(0, 1, 2), P2Path(3, 4, 5)}));
  EXPECT_FALSE(is_valid_packing(p6, Packing{P2Path(0, 2, 1)}));
  EXPECT_TRUE(is_maximal(p6, Packing{P2Path(1, 2, 3)}));
  EXPECT_FALSE(is_maximal(p6, Packing{P2Path(0, 1, 2)}));
  EXPECT_TRUE(is_maximal(Graph(4), Packing{}));
}
