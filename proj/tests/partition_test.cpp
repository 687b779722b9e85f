#include <gtest/gtest.h>

#include "br/partition.hpp"
#include "test_helpers.hpp"

using namespace br;

TEST(Partition, ConstructionValidates) {
  EXPECT_NO_THROW(Partition({5, 5, 5, 4}));
  EXPECT_NO_THROW(Partition(std::vector<int>{}));
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);  // increasing
  EXPECT_THROW(Partition({0, 2}), std::invalid_argument);  // interior zero
  EXPECT_THROW(Partition({-1}), std::invalid_argument);
  // trailing zeros are stripped, not rejected
  EXPECT_EQ(Partition({2, 0}), Partition({2}));
  EXPECT_EQ(Partition({3, 1, 0, 0}).length(), 2);
}

TEST(Partition, Accessors) {
  const Partition p({5, 5, 5, 4});
  EXPECT_EQ(p.weight(), 19);
  EXPECT_EQ(p.length(), 4);
  EXPECT_EQ(p.max_part(), 5);
  EXPECT_EQ(p.part(0), 5);
  EXPECT_EQ(p.part(3), 4);
  EXPECT_EQ(p.part(7), 0); // padded
  EXPECT_EQ(p.to_string(), "5,5,5,4");
  EXPECT_EQ(Partition().to_string(), "0");
}

TEST(Partition, ParseRoundtrip) {
  for (const char* s : {"5,5,5,4", "2,1", "1", "3,3,2"}) {
    EXPECT_EQ(parse_partition(s).to_string(), s);
  }
  EXPECT_THROW(parse_partition("1,2"), std::invalid_argument);
  EXPECT_THROW(parse_partition("x"), std::invalid_argument);
  // "0" and the empty string both denote the empty partition
  EXPECT_EQ(parse_partition("0"), Partition());
  EXPECT_EQ(parse_partition(""), Partition());
}

TEST(Partition, ConjugateIsInvolution) {
  const Partition p({4, 2, 1});
  EXPECT_EQ(p.conjugate(), Partition({3, 2, 1, 1}));
  for (int d = 0; d <= 8; ++d)
    for (const auto& q : all_partitions(d)) EXPECT_EQ(q.conjugate().conjugate(), q);
}

TEST(Partition, AllPartitionsCountsAndOrder) {
  // p(0..10) = 1 1 2 3 5 7 11 15 22 30 42
  const std::size_t counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int d = 0; d <= 10; ++d) {
    const auto ps = all_partitions(d);
    EXPECT_EQ(ps.size(), counts[d]) << "d=" << d;
    for (std::size_t i = 1; i < ps.size(); ++i)
      EXPECT_TRUE(ps[i] < ps[i - 1]) << "descending lex at d=" << d;
    for (const auto& q : ps) EXPECT_EQ(q.weight(), d);
    if (d >= 1) {
      EXPECT_EQ(ps.front(), Partition({d}));
      EXPECT_EQ(ps.back(), Partition(std::vector<int>(d, 1)));
    }
  }
}

TEST(Partition, SytCountHookFormulaVsBruteForce) {
  for (int d = 1; d <= 6; ++d)
    for (const auto& p : all_partitions(d))
      EXPECT_EQ(syt_count(p), brtest::syt_count_brute(p)) << p.to_string();
}

TEST(Partition, SytSquaresSumToFactorial) {
  // sum over irreps of dim^2 = |S_d|
  for (int d = 1; d <= 9; ++d) {
    std::uint64_t sum = 0;
    for (const auto& p : all_partitions(d)) {
      const std::uint64_t f = syt_count(p);
      sum += f * f;
    }
    std::uint64_t fact = 1;
    for (int i = 2; i <= d; ++i) fact *= i;
    EXPECT_EQ(sum, fact) << "d=" << d;
  }
}
