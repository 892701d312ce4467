#include <gtest/gtest.h>

#include <random>

#include "p2pack/instance_io.hpp"
#include "p2pack/oracle.hpp"
#include "p2pack/packing_reduce.hpp"
#include "p2pack/suite.hpp"
#include "support/brute.hpp"

using namespace p2pack;

namespace {

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

}  // namespace

TEST(MaxPackingDp, Examples) {
  EXPECT_EQ(max_packing_dp(path_graph(6)).size, 2u);
  const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(max_packing_dp(k4).size, 1u);
  EXPECT_EQ(max_packing_dp(petersen()).size, 3u);
  EXPECT_EQ(brute::max_packing(petersen()), 3u);
  EXPECT_EQ(max_packing_dp(Graph(0)).size, 0u);
}

TEST(MaxPackingDp, WitnessAndCap) {
  const auto r = max_packing_dp(petersen());
  EXPECT_TRUE(is_valid_packing(petersen(), r.witness));
  EXPECT_EQ(r.witness.size(), r.size);
  EXPECT_THROW(max_packing_dp(Graph(21)), RefusalError);
  EXPECT_NO_THROW(max_packing_dp(Graph(21), 21));
  EXPECT_THROW(max_packing_dp(Graph(29), 40), RefusalError);
}

TEST(MaxPackingDp, AgreesWithBranching) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const Graph g = brute::random_graph(rng, 4 + t % 10, 0.1 + 0.1 * (t % 5));
    const auto r = max_packing_dp(g);
    ASSERT_EQ(r.size, brute::max_packing(g)) << "trial " << t;
    ASSERT_TRUE(is_valid_packing(g, r.witness));
  }
}

TEST(EnumeratePackings, HandCounts) {
  EXPECT_EQ(enumerate_packings(Graph(0), 0).size(), 1u);
  const Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(enumerate_packings(k3, 1).size(), 3u);
  const auto six = enumerate_packings(path_graph(6), 2);
  ASSERT_EQ(six.size(), 1u);
  EXPECT_EQ(six[0], (Packing{P2Path(0, 1, 2), P2Path(3, 4, 5)}));
  EXPECT_THROW(enumerate_packings(Graph(15), 1), RefusalError);
}

TEST(EnumeratePackings, CountsMatchBranching) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 60; ++t) {
    const Graph g = brute::random_graph(rng, 5 + t % 6, 0.35);
    std::vector<std::size_t> by_size(6, 0);
    brute::for_each_packing(g, [&](const std::vector<P2Path>& q) { ++by_size[q.size()]; });
    for (std::size_t s = 0; s < by_size.size(); ++s)
      EXPECT_EQ(enumerate_packings(g, s).size(), by_size[s]);
  }
}

TEST(ExtremalFamily, UniqueLargerPacking) {
  const auto inst = gen_planted(2, 0, 1);
  const Packing p{P2Path(0, 1, 2)};
  const auto fam = extremal_family(inst.graph, p);
  ASSERT_EQ(fam.q1_family.size(), 1u);
  EXPECT_EQ(fam.q1_family, fam.q2_family);
  EXPECT_EQ(fam.reused_paths, 1u);
  EXPECT_EQ(fam.shared_edges, 2u);
}

TEST(ExtremalFamily, NoLargerPacking) {
  const auto fam = extremal_family(path_graph(6), Packing{P2Path(0, 1, 2), P2Path(3, 4, 5)});
  EXPECT_TRUE(fam.q1_family.empty());
  EXPECT_TRUE(fam.q2_family.empty());
}

TEST(ExtremalFamily, RefinementIsSubset) {
  std::mt19937_64 rng(31);
  Rng pick(31);
  for (int t = 0; t < 100; ++t) {
    const Graph g = brute::random_graph(rng, 7 + t % 6, 0.3);
    const Packing p = random_maximal_packing(g, pick);
    const auto fam = extremal_family(g, p);
    for (const auto& q : fam.q2_family)
      EXPECT_NE(std::find(fam.q1_family.begin(), fam.q1_family.end(), q), fam.q1_family.end());
  }
}

TEST(Foldable, Definitions) {
  const P2Path p(0, 1, 2);
  // q's midpoint is p's endpoint 0; its only path-neighbour 1 is uncovered.
  const P2Path q(5, 0, 6);
  EXPECT_TRUE(is_foldable(q, p, {0, 5, 6}));
  EXPECT_FALSE(is_foldable(q, p, {0, 1, 5, 6}));
  EXPECT_FALSE(is_foldable(P2Path(5, 7, 6), p, {5, 6, 7}));
  const P2Path r(1, 5, 6);
  EXPECT_TRUE(is_shiftable(r, 1, p, {1, 5, 6}));
  EXPECT_FALSE(is_shiftable(r, 1, p, {0, 1, 2, 5, 6}));
  EXPECT_FALSE(is_shiftable(r, 5, p, {1, 5, 6}));
}

TEST(Section3, VacuousWhenMaximum) {
  const auto rep = verify_section3(path_graph(6), Packing{P2Path(0, 1, 2), P2Path(3, 4, 5)});
  EXPECT_TRUE(rep.vacuous());
  EXPECT_TRUE(rep.ok());
  const auto empty = verify_section3(Graph(4), Packing{});
  EXPECT_TRUE(empty.vacuous());
  EXPECT_THROW(verify_section3(path_graph(6), Packing{P2Path(0, 1, 2)}), ContractViolation);
}

TEST(Section3, RandomMaximalPackings) {
  std::mt19937_64 rng(1234);
  Rng pick(1234);
  int nonvacuous = 0;
  for (int t = 0; t < 400 && nonvacuous < 200; ++t) {
    const Graph g = brute::random_graph(rng, 7 + t % 6, 0.2 + 0.1 * (t % 3));
    const Packing p = random_maximal_packing(g, pick);
    const auto rep = verify_section3(g, p);
    if (rep.vacuous() || rep.j == 0) continue;
    ++nonvacuous;
    for (const auto& v : rep.violations) ADD_FAILURE() << v.check << ": " << v.detail;
  }
  EXPECT_GT(nonvacuous, 50);
}

TEST(Section3, PlantedWithNoise) {
  Rng pick(77);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = gen_planted(3, 2 + seed % 5, seed);
    for (int rep = 0; rep < 3; ++rep) {
      const Packing p = random_maximal_packing(inst.graph, pick);
      const auto r = verify_section3(inst.graph, p);
      for (const auto& v : r.violations) ADD_FAILURE() << v.check << ": " << v.detail;
    }
  }
}

TEST(TotalEdgeCover, Examples) {
  EXPECT_EQ(min_total_edge_cover_bruteforce(path_graph(3)).size, 2u);
  // Five vertices, one P2 at most: 5 - 1 = 4 edges, i.e. the whole path.
  EXPECT_EQ(min_total_edge_cover_bruteforce(path_graph(5)).size, 4u);
  EXPECT_EQ(brute::min_total_edge_cover(path_graph(5)), 4u);
  EXPECT_EQ(min_total_edge_cover_bruteforce(path_graph(6)).size, 4u);
  const Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(min_total_edge_cover_bruteforce(k3).size, 2u);
  EXPECT_THROW(min_total_edge_cover_bruteforce(path_graph(2)), InputError);
  EXPECT_THROW(min_total_edge_cover_bruteforce(path_graph(22)), RefusalError);
}

TEST(TotalEdgeCover, AgreesWithBranchingAndGallai) {
  std::mt19937_64 rng(64);
  int tested = 0;
  for (int t = 0; t < 400 && tested < 80; ++t) {
    const Graph g = brute::random_graph(rng, 5 + t % 6, 0.45);
    if (g.edge_count() > 16) continue;
    const auto comps = components_outside(g, {});
    if (std::any_of(comps.begin(), comps.end(), [](const VertexSet& c) { return c.size() < 3; }))
      continue;
    ++tested;
    const auto tec = min_total_edge_cover_bruteforce(g);
    EXPECT_TRUE(is_total_edge_cover(g, tec.edges));
    EXPECT_EQ(tec.size, brute::min_total_edge_cover(g));
    EXPECT_EQ(tec.size + brute::max_packing(g), g.vertex_count());
  }
  EXPECT_GT(tested, 30);
}
