#include <gtest/gtest.h>

#include <random>

#include "p2pack/crown.hpp"
#include "p2pack/packing_reduce.hpp"
#include "support/brute.hpp"

using namespace p2pack;

namespace {

const DoubleCrown& as_double(const CrownDecomposition& c) { return std::get<DoubleCrown>(c.crown); }
const FatCrown& as_fat(const CrownDecomposition& c) { return std::get<FatCrown>(c.crown); }

}  // namespace

TEST(DoubleCrown, StarWithOutsideVertex) {
  // h=0, leaves a=1, b=2, outside r=3.
  const Graph g(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto c = find_double_crown(g, {1, 2});
  EXPECT_EQ(c.head, VertexSet{0});
  EXPECT_EQ(as_double(c).c_prime, VertexSet{1});
  EXPECT_EQ(as_double(c).c_double_prime, VertexSet{2});
  EXPECT_TRUE(as_double(c).c0.empty());
  EXPECT_EQ(c.remainder, VertexSet{3});
  EXPECT_FALSE(crown_violation(g, c));
}

TEST(DoubleCrown, ThirdLeafGoesToC0) {
  const Graph g(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto c = find_double_crown(g, {1, 2, 3});
  EXPECT_EQ(c.head, VertexSet{0});
  const auto& d = as_double(c);
  EXPECT_EQ(d.c_prime.size() + d.c_double_prime.size(), 2u);
  EXPECT_EQ(d.c0.size(), 1u);
  EXPECT_TRUE(c.remainder.empty());
}

TEST(DoubleCrown, TightCountUsesWholeNeighbourhood) {
  // Heads 0 and 1; leaves 2,3 on head 0 and 4,5 on head 1; 2 also sees 1.
  const Graph g(7, {{0, 2}, {0, 3}, {1, 4}, {1, 5}, {1, 2}, {0, 6}, {1, 6}});
  const auto c = find_double_crown(g, {2, 3, 4, 5});
  EXPECT_EQ(c.head, (VertexSet{0, 1}));
  EXPECT_TRUE(as_double(c).c0.empty());
  EXPECT_EQ(c.crown_vertices(), (VertexSet{2, 3, 4, 5}));
  EXPECT_EQ(c.lifted_paths().size(), 2u);
}

TEST(DoubleCrown, Preconditions) {
  const Graph g(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
  EXPECT_THROW(find_double_crown(g, {}), InputError);
  EXPECT_THROW(find_double_crown(g, {1, 2}), InputError);  // adjacent
  EXPECT_THROW(find_double_crown(g, {3}), InputError);     // |I| < 2|N(I)|
  const Graph iso(3, {{0, 1}});
  EXPECT_THROW(find_double_crown(iso, {2}), InputError);
}

TEST(FatCrown, SingleK2) {
  // K2 {u=1, v=2}, head h=0 adjacent to u and to outside r=3.
  const Graph g(4, {{1, 2}, {0, 1}, {0, 3}});
  const auto c = find_fat_crown(g, {{1, 2}});
  EXPECT_EQ(c.head, VertexSet{0});
  EXPECT_EQ(c.crown_vertices(), (VertexSet{1, 2}));
  EXPECT_EQ(c.remainder, VertexSet{3});
  EXPECT_EQ(as_fat(c).m.at(0), 1u);
  EXPECT_EQ(c.lifted_paths(), (std::vector<P2Path>{P2Path(0, 1, 2)}));
}

TEST(FatCrown, TwoK2sOnOneHead) {
  const Graph g(6, {{1, 2}, {3, 4}, {0, 1}, {0, 3}, {0, 5}});
  const auto c = find_fat_crown(g, {{3, 4}, {1, 2}});
  EXPECT_EQ(c.head, VertexSet{0});
  EXPECT_EQ(as_fat(c).k2_list, (std::vector<Edge>{{1, 2}, {3, 4}}));
  EXPECT_EQ(c.remainder, VertexSet{5});
}

TEST(FatCrown, Preconditions) {
  const Graph g(6, {{1, 2}, {3, 4}, {0, 1}, {0, 3}, {2, 3}});
  EXPECT_THROW(find_fat_crown(g, {}), InputError);
  EXPECT_THROW(find_fat_crown(g, {{1, 3}}), InputError);          // not an edge
  EXPECT_THROW(find_fat_crown(g, {{1, 2}, {3, 4}}), InputError);  // adjacent K2s
  const Graph lone(2, {{0, 1}});
  EXPECT_THROW(find_fat_crown(lone, {{0, 1}}), InputError);
}

TEST(CrownViolation, DetectsBrokenDecompositions) {
  const Graph g(4, {{0, 1}, {0, 2}, {0, 3}});
  auto c = find_double_crown(g, {1, 2});
  auto broken = c;
  broken.remainder.clear();
  EXPECT_TRUE(crown_violation(g, broken));
  broken = c;
  std::get<DoubleCrown>(broken.crown).m1[0] = 3;
  EXPECT_TRUE(crown_violation(g, broken));
  broken = c;
  broken.head.clear();
  broken.remainder.insert(0);
  EXPECT_TRUE(crown_violation(g, broken));
}

TEST(Detect, EngineeredDoubleCrown) {
  // One P2 (1,0,2) with two Q0-vertices 3, 4 hanging off its midpoint 0.
  const Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  const Packing p{P2Path(1, 0, 2)};
  const auto lc = classify_leftover(g, p);
  ASSERT_TRUE(check_properties(g, p, lc));
  // k = 2: |Q0| = 2 = 2k - 2 > 2k - 3.
  const auto c = detect_crown_opportunity(g, p, lc, 2);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->kind(), CrownKind::double_crown);
  EXPECT_FALSE(crown_violation(g, *c));
  EXPECT_EQ(c->head, VertexSet{0});
}

TEST(Detect, BelowThresholds) {
  const Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
  const Packing p{P2Path(1, 0, 2)};
  const auto lc = classify_leftover(g, p);
  // k = 3: |Q0| = 0 <= 3, |Q1| = 1 <= 2.
  EXPECT_FALSE(detect_crown_opportunity(g, p, lc, 3));
  EXPECT_THROW(detect_crown_opportunity(g, p, lc, 1), ContractViolation);
}

TEST(Detect, FatCrownFromQ1) {
  // One P2 (1,0,2); Q1-edges {3,4} and {5,6} both hang off vertex 0.
  const Graph g(7, {{0, 1}, {0, 2}, {3, 4}, {5, 6}, {0, 3}, {0, 5}});
  const Packing p{P2Path(1, 0, 2)};
  const auto lc = classify_leftover(g, p);
  ASSERT_TRUE(check_properties(g, p, lc));
  const auto c = detect_crown_opportunity(g, p, lc, 2);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->kind(), CrownKind::fat_crown);
  EXPECT_FALSE(crown_violation(g, *c));
}

TEST(ApplyCrown, LiftsCrownPaths) {
  const Graph g(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto c = find_double_crown(g, {1, 2});
  const auto [reduced, rec] = apply_crown(Instance{g, 1}, c);
  EXPECT_EQ(reduced.k, 0);
  EXPECT_EQ(reduced.graph.vertex_count(), 1u);
  EXPECT_EQ(lift_solution(rec, Packing{}), (Packing{P2Path(1, 0, 2)}));

  const Graph f(4, {{1, 2}, {0, 1}, {0, 3}});
  const auto fc = find_fat_crown(f, {{1, 2}});
  const auto [fr, frec] = apply_crown(Instance{f, 3}, fc);
  EXPECT_EQ(fr.k, 2);
  EXPECT_EQ(lift_solution(frec, Packing{}), (Packing{P2Path(0, 1, 2)}));
}

TEST(ApplyCrown, RejectsInvalidCrown) {
  const Graph g(4, {{0, 1}, {0, 2}, {0, 3}});
  auto c = find_double_crown(g, {1, 2});
  c.remainder.clear();
  EXPECT_THROW(apply_crown(Instance{g, 1}, c), InputError);
}

TEST(LiftSolution, RejectsForeignPaths) {
  const LiftRecord rec{{0, 5}, {}};
  EXPECT_THROW(lift_solution(rec, Packing{P2Path(0, 1, 2)}), InternalError);
  const LiftRecord clash{{0, 1, 2}, {P2Path(2, 3, 4)}};
  EXPECT_THROW(lift_solution(clash, Packing{P2Path(0, 1, 2)}), InternalError);
}

// Crown reduction preserves the answer: max packing of G is at least k
// exactly when G - H - C has k - |H| paths.
TEST(CrownSoundness, RandomDetectedCrowns) {
  std::mt19937_64 rng(23);
  int seen = 0;
  for (int t = 0; t < 2000 && seen < 60; ++t) {
    const Graph g = brute::random_graph(rng, 7 + t % 7, 0.15 + 0.03 * (t % 3));
    const auto r = reduce_exhaustive(g, greedy_maximal(g, {}));
    const auto c = detect_crown_opportunity(g, r.packing, r.leftover,
                                            static_cast<std::int64_t>(r.packing.size()),
                                            CrownMode::opportunistic);
    if (!c) continue;
    ++seen;
    ASSERT_FALSE(crown_violation(g, *c));
    const std::size_t opt = brute::max_packing(g);
    for (std::int64_t k = 1; k <= 4; ++k) {
      const auto [reduced, rec] = apply_crown(Instance{g, k}, *c);
      const bool before = opt >= static_cast<std::size_t>(k);
      const bool after = brute::max_packing(reduced.graph) >= static_cast<std::size_t>(reduced.k);
      EXPECT_EQ(before, after) << "trial " << t << " k=" << k;
    }
  }
  EXPECT_GT(seen, 10);
}
