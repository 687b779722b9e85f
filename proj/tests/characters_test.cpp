#include <gtest/gtest.h>

#include "br/bigint.hpp"
#include "br/characters.hpp"
#include "br/partition.hpp"

using namespace br;

TEST(Characters, S3TableIsTheTextbookOne) {
  const CharacterTable t(3);
  const Partition triv({3}), std_({2, 1}), sgn({1, 1, 1});
  const Partition c1({1, 1, 1}), c2({2, 1}), c3({3});
  EXPECT_EQ(t.chi(triv, c1), 1);
  EXPECT_EQ(t.chi(triv, c2), 1);
  EXPECT_EQ(t.chi(triv, c3), 1);
  EXPECT_EQ(t.chi(std_, c1), 2);
  EXPECT_EQ(t.chi(std_, c2), 0);
  EXPECT_EQ(t.chi(std_, c3), -1);
  EXPECT_EQ(t.chi(sgn, c1), 1);
  EXPECT_EQ(t.chi(sgn, c2), -1);
  EXPECT_EQ(t.chi(sgn, c3), 1);
}

TEST(Characters, DegreeColumnIsSytCount) {
  for (int d = 1; d <= 10; ++d) {
    const CharacterTable t(d);
    const Partition identity_class(std::vector<int>(d, 1));
    for (const auto& lambda : t.partitions())
      EXPECT_EQ(t.chi(lambda, identity_class), static_cast<std::int64_t>(syt_count(lambda)))
          << lambda.to_string();
  }
}

TEST(Characters, RowOrthogonality) {
  // sum_mu |C_mu| chi_l(mu) chi_m(mu) = d! [l == m]
  for (int d = 1; d <= 12; ++d) {
    const CharacterTable t(d);
    const Int fact = factorial(d);
    const std::size_t n = t.size();
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t m = l; m < n; ++m) {
        Int s = 0;
        for (std::size_t mu = 0; mu < n; ++mu)
          s += t.class_size(mu) * Int(t.chi(l, mu)) * Int(t.chi(m, mu));
        EXPECT_EQ(s, l == m ? fact : Int(0)) << "d=" << d << " l=" << l << " m=" << m;
      }
  }
}

TEST(Characters, ClassSizesSumToGroupOrder) {
  for (int d = 1; d <= 12; ++d) {
    const CharacterTable t(d);
    Int total = 0;
    for (std::size_t mu = 0; mu < t.size(); ++mu) total += t.class_size(mu);
    EXPECT_EQ(total, factorial(d));
  }
  EXPECT_EQ(conjugacy_class_size(Partition({2, 1})), 3);   // transpositions in S_3
  EXPECT_EQ(conjugacy_class_size(Partition({3})), 2);      // 3-cycles in S_3
  EXPECT_EQ(conjugacy_class_size(Partition({2, 2, 1})), 15);
}

TEST(Characters, SignCharacterIsParity) {
  const int d = 6;
  const CharacterTable t(d);
  const Partition sgn(std::vector<int>(d, 1));
  for (const auto& mu : t.partitions()) {
    int parity = 0;
    for (int part : mu.parts) parity += part - 1;
    EXPECT_EQ(t.chi(sgn, mu), parity % 2 == 0 ? 1 : -1) << mu.to_string();
  }
}

TEST(Characters, MnCharacterMatchesTableAndValidates) {
  EXPECT_EQ(mn_character(Partition({2, 1}), Partition({3})), -1);
  EXPECT_EQ(mn_character(Partition({4, 1}), Partition({2, 2, 1})), 0);
  EXPECT_THROW(mn_character(Partition({2, 1}), Partition({2})), std::invalid_argument);
  const CharacterTable& cached = character_table(5);
  EXPECT_EQ(&cached, &character_table(5)); // process-wide cache
}
