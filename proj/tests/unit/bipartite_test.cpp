#include <gtest/gtest.h>

#include <random>

#include "p2pack/bipartite.hpp"
#include "support/brute.hpp"

using namespace p2pack;

namespace {

BipartiteGraph random_bipartite(std::mt19937_64& rng, std::size_t l, std::size_t r, double p) {
  BipartiteGraph b(l, r);
  std::bernoulli_distribution coin(p);
  for (std::uint32_t i = 0; i < l; ++i)
    for (std::uint32_t j = 0; j < r; ++j)
      if (coin(rng)) b.add_edge(i, j);
  return b;
}

}  // namespace

TEST(MaxMatching, SmallCases) {
  BipartiteGraph k22(2, 2);
  for (std::uint32_t l = 0; l < 2; ++l)
    for (std::uint32_t r = 0; r < 2; ++r) k22.add_edge(l, r);
  EXPECT_EQ(max_matching(k22).size(), 2u);

  BipartiteGraph fan(3, 1);
  for (std::uint32_t l = 0; l < 3; ++l) fan.add_edge(l, 0);
  const auto m = max_matching(fan);
  EXPECT_EQ(m.size(), 1u);
  EXPECT_TRUE(is_valid_matching(fan, m));

  EXPECT_EQ(max_matching(BipartiteGraph(0, 0)).size(), 0u);
  EXPECT_THROW(fan.add_edge(3, 0), InputError);
}

TEST(MaxMatching, NeedsAugmentingPath) {
  // Greedy would match 0-0 and strand 1.
  BipartiteGraph b(2, 2);
  b.add_edge(0, 0);
  b.add_edge(0, 1);
  b.add_edge(1, 0);
  EXPECT_EQ(max_matching(b).size(), 2u);
}

TEST(MaxMatching, AgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 300; ++t) {
    const auto b = random_bipartite(rng, 1 + t % 8, 1 + (t / 8) % 8, 0.1 + 0.1 * (t % 5));
    const auto m = max_matching(b);
    ASSERT_TRUE(is_valid_matching(b, m));
    ASSERT_EQ(m.size(), brute::max_matching(b)) << "trial " << t;
  }
}

TEST(AlternatingReachable, EmptySources) {
  BipartiteGraph b(2, 2);
  b.add_edge(0, 0);
  const auto sets = alternating_reachable(b, max_matching(b), {});
  EXPECT_TRUE(sets.left.empty());
  EXPECT_TRUE(sets.right.empty());
}

TEST(AlternatingReachable, OneStep) {
  // Left 1 is free; its only neighbour (right 0) is matched to left 0.
  BipartiteGraph b(2, 1);
  b.add_edge(0, 0);
  b.add_edge(1, 0);
  Matching m(2, 1);
  m.match(0, 0);
  const std::uint32_t src[] = {1};
  const auto sets = alternating_reachable(b, m, src);
  EXPECT_EQ(sets.right, (std::vector<std::uint32_t>{0}));
  EXPECT_EQ(sets.left, (std::vector<std::uint32_t>{0, 1}));
}

TEST(AlternatingReachable, ClosedUnderOneMoreStep) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const auto b = random_bipartite(rng, 2 + t % 7, 2 + t % 5, 0.35);
    const auto m = max_matching(b);
    std::vector<std::uint32_t> free;
    for (std::uint32_t l = 0; l < b.left_count(); ++l)
      if (!m.left_matched(l)) free.push_back(l);
    const auto sets = alternating_reachable(b, m, free);
    const std::set<std::uint32_t> left(sets.left.begin(), sets.left.end());
    const std::set<std::uint32_t> right(sets.right.begin(), sets.right.end());
    for (auto l : left) {
      for (auto r : b.neighbors(l)) {
        if (m.left_mate[l] == r) continue;
        EXPECT_TRUE(right.contains(r));
        // With a maximum matching every reached right vertex is matched.
        ASSERT_TRUE(m.right_matched(r));
        EXPECT_TRUE(left.contains(m.right_mate[r]));
      }
    }
  }
}
