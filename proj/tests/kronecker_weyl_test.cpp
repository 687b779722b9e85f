#include <gtest/gtest.h>

#include "br/characters.hpp"
#include "br/kronecker.hpp"
#include "br/partition.hpp"
#include "br/rng.hpp"
#include "br/tensor.hpp"
#include "br/weyl.hpp"
#include "test_helpers.hpp"

using namespace br;

TEST(Kronecker, KnownSmallValues) {
  EXPECT_EQ(kronecker(Partition({2}), Partition({1, 1}), Partition({1, 1})), 1u);
  EXPECT_EQ(kronecker(Partition({2}), Partition({2}), Partition({1, 1})), 0u);
  EXPECT_EQ(kronecker(Partition({2, 1}), Partition({2, 1}), Partition({2, 1})), 1u);
  // chi_22 (x) chi_22 = (4) + (2,2) + (1^4) in S4, so (3,1) does not appear
  EXPECT_EQ(kronecker(Partition({2, 2}), Partition({2, 2}), Partition({3, 1})), 0u);
  EXPECT_EQ(kronecker(Partition({2, 2}), Partition({2, 2}), Partition({1, 1, 1, 1})), 1u);
  EXPECT_EQ(kronecker(Partition({2, 2}), Partition({2, 2}), Partition({2, 2})), 1u);
  EXPECT_EQ(kronecker(Partition({3, 1}), Partition({2, 2}), Partition({2, 1, 1})), 1u);
}

TEST(Kronecker, TrivialFactorGivesDelta) {
  // k_{(d), mu, nu} = [mu == nu]
  for (int d = 2; d <= 7; ++d) {
    const Partition triv({d});
    const auto ps = all_partitions(d);
    for (const auto& mu : ps)
      for (const auto& nu : ps)
        EXPECT_EQ(kronecker(triv, mu, nu), mu == nu ? 1u : 0u)
            << mu.to_string() << " " << nu.to_string();
  }
}

TEST(Kronecker, SymmetricUnderPermutingFactors) {
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 3 + static_cast<int>(rng.below(4));
    const auto ps = all_partitions(d);
    const Partition pi = ps[rng.below(ps.size())];
    const Partition mu = ps[rng.below(ps.size())];
    const Partition nu = ps[rng.below(ps.size())];
    const auto k = kronecker(pi, mu, nu);
    EXPECT_EQ(kronecker(pi, nu, mu), k);
    EXPECT_EQ(kronecker(mu, pi, nu), k);
    EXPECT_EQ(kronecker(nu, mu, pi), k);
  }
}

TEST(Kronecker, SquareSumIdentity) {
  // sum over all (mu, nu) of k_{pi,mu,nu} * f_mu * f_nu = f_pi * d!/ ... no:
  // chi_mu chi_nu expands the class function chi_pi; the cleanest exact
  // cross-check is sum_{pi} k_{pi,mu,nu} f_pi = f_mu f_nu (decomposing the
  // tensor product of two irreps).
  for (int d = 2; d <= 6; ++d) {
    const auto ps = all_partitions(d);
    for (const auto& mu : ps)
      for (const auto& nu : ps) {
        std::uint64_t lhs = 0;
        for (const auto& pi : ps) lhs += kronecker(pi, mu, nu) * syt_count(pi);
        EXPECT_EQ(lhs, syt_count(mu) * syt_count(nu))
            << mu.to_string() << " x " << nu.to_string();
      }
  }
}

TEST(Kronecker, WeightMismatchRejected) {
  EXPECT_THROW(kronecker(Partition({2}), Partition({1, 1}), Partition({1})),
               std::invalid_argument);
}

TEST(Weyl, DimensionMatchesSsytEnumeration) {
  for (int d = 1; d <= 6; ++d)
    for (const auto& lambda : all_partitions(d))
      for (int n = lambda.length(); n <= 4; ++n)
        EXPECT_EQ(weyl_dim(lambda, n), brtest::ssyt_count(lambda, n))
            << lambda.to_string() << " n=" << n;
}

TEST(Weyl, KnownValues) {
  EXPECT_EQ(weyl_dim(Partition({1}), 4), 4u);        // vector rep
  EXPECT_EQ(weyl_dim(Partition({1, 1}), 4), 6u);     // wedge^2
  EXPECT_EQ(weyl_dim(Partition({2}), 4), 10u);       // Sym^2
  EXPECT_EQ(weyl_dim(Partition({5, 5, 5, 5}), 4), 1u); // power of the determinant
  EXPECT_EQ(weyl_dim(Partition({5, 5, 5, 4}), 4), 4u);
}

TEST(Weyl, TooManyPartsRejected) {
  EXPECT_THROW(weyl_dim(Partition({1, 1, 1}), 2), std::invalid_argument);
}

TEST(Weyl, IsotypicDimensionIsTheTripleProduct) {
  const Partition p({5, 5, 5, 4});
  EXPECT_EQ(isotypic_dimension(p, p, p, 4, 4, 4), 64u);
  EXPECT_EQ(isotypic_dimension(Partition({2}), Partition({1, 1}), Partition({1, 1}), 2, 2, 2),
            3u * 1u * 1u);
}

TEST(Tensor, ExpectedCodimFormula) {
  EXPECT_EQ(expected_codim(4, 4, 4, 6), 4);
  EXPECT_EQ(expected_codim(4, 8, 9, 15), 3);
  EXPECT_EQ(expected_codim(7, 7, 7, 18), 1);
  EXPECT_EQ(expected_codim(3, 4, 6, 6), 6);
  EXPECT_EQ(expected_codim(4, 4, 5, 7), 3);
  EXPECT_EQ(expected_codim(3, 5, 7, 8), 1);
  EXPECT_LE(expected_codim(2, 2, 2, 2), 0); // sigma_2 fills C^2 x C^2 x C^2
}
