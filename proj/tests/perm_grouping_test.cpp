#include <gtest/gtest.h>

#include <set>

#include "br/grouping.hpp"
#include "br/partition.hpp"
#include "br/perm.hpp"
#include "br/rng.hpp"

using namespace br;

TEST(Perm, BasicOps) {
  EXPECT_EQ(identity_perm(4), (Perm{0, 1, 2, 3}));
  EXPECT_TRUE(is_permutation(Perm{2, 0, 1}));
  EXPECT_FALSE(is_permutation(Perm{0, 0, 1}));
  EXPECT_FALSE(is_permutation(Perm{0, 3}));
  const Perm p{2, 0, 1};
  const Perm q = inverse_perm(p);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(q[p[i]], i);
}

TEST(Perm, RandomPermIsUniformishAndValid) {
  Rng rng(51);
  std::set<Perm> seen;
  for (int i = 0; i < 200; ++i) {
    const Perm p = random_perm(4, rng);
    EXPECT_TRUE(is_permutation(p));
    seen.insert(p);
  }
  EXPECT_EQ(seen.size(), 24u); // all of S_4 hit in 200 draws
}

TEST(Perm, OneIndexedBoundary) {
  const std::vector<int> ext{3, 1, 2};
  const Perm p = perm_from_one_indexed(ext);
  EXPECT_EQ(p, (Perm{2, 0, 1}));
  EXPECT_EQ(perm_to_one_indexed(p), ext);
  EXPECT_THROW(perm_from_one_indexed({0, 1, 2}), std::invalid_argument);
  EXPECT_THROW(perm_from_one_indexed({1, 1, 2}), std::invalid_argument);
}

TEST(Grouping, ColumnBlocksOfAShape) {
  // (2,1): one size-1 block then one size-2 block, consecutive slots
  const auto g21 = column_grouping(Partition({2, 1}));
  ASSERT_EQ(g21.groups.size(), 2u);
  EXPECT_EQ(g21.groups[0], (std::vector<int>{0}));
  EXPECT_EQ(g21.groups[1], (std::vector<int>{1, 2}));

  // (5,5,5,4): p_j - p_{j+1} blocks of size j, so no singles or pairs,
  // one triple (5-4), and four quadruples; d = 3 + 16 = 19.
  const auto g = column_grouping(Partition({5, 5, 5, 4}));
  ASSERT_EQ(g.groups.size(), 5u);
  EXPECT_EQ(g.groups[0].size(), 3u);
  for (int i = 1; i <= 4; ++i) EXPECT_EQ(g.groups[i].size(), 4u);
  // groups tile {0..18} in order
  int next = 0;
  for (const auto& grp : g.groups)
    for (int s : grp) EXPECT_EQ(s, next++);
  EXPECT_EQ(next, 19);

  const auto slot_map = g.slot_to_group();
  for (int s = 0; s < 19; ++s) EXPECT_NE(slot_map[s], -1);
}

TEST(Grouping, RelocatePushesSlotsThroughTau) {
  const auto g = column_grouping(Partition({2, 1}));
  const Perm tau{1, 2, 0};
  const auto moved = relocate(g, tau);
  ASSERT_EQ(moved.groups.size(), 2u);
  EXPECT_EQ(moved.groups[0], (std::vector<int>{tau[0]}));
  EXPECT_EQ(moved.groups[1], (std::vector<int>{tau[1], tau[2]}));
}

TEST(Grouping, ZeroPatternKnownCases) {
  const Partition p21({2, 1});
  // identity pair: slots {1,2} share a column in all three tableaux
  EXPECT_TRUE(has_zero_pattern(p21, p21, p21, identity_perm(3), identity_perm(3)));
  // tau2 = transposition (1 2) breaks it
  EXPECT_FALSE(has_zero_pattern(p21, p21, p21, identity_perm(3), Perm{1, 0, 2}));
  // single-column shapes always collide
  const Partition col({1, 1, 1});
  EXPECT_TRUE(has_zero_pattern(col, col, col, Perm{2, 0, 1}, Perm{1, 2, 0}));
  // a row shape on one side can never collide (its groups are singletons)
  EXPECT_FALSE(
      has_zero_pattern(Partition({3}), p21, p21, identity_perm(3), identity_perm(3)));
}

TEST(Grouping, RejectionSamplerAvoidsZeroPatterns) {
  Rng rng(53);
  const Partition p({2, 2, 1});
  for (int i = 0; i < 100; ++i) {
    const auto pair = random_pair_avoiding_zero_pattern(p, p, p, rng);
    ASSERT_TRUE(pair.has_value());
    EXPECT_TRUE(is_permutation(pair->first));
    EXPECT_TRUE(is_permutation(pair->second));
    EXPECT_FALSE(has_zero_pattern(p, p, p, pair->first, pair->second));
  }
  // impossible request: single columns always produce a zero pattern
  const Partition col({1, 1});
  EXPECT_EQ(random_pair_avoiding_zero_pattern(col, col, col, rng, 200), std::nullopt);
}
