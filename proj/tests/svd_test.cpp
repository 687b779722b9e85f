#include <gtest/gtest.h>

#include "br/parametrization.hpp"
#include "br/svd.hpp"

using namespace br;

namespace {

CMat random_matrix(int rows, int cols, Rng& rng) {
  CMat m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = random_complex(rng);
  return m;
}

} // namespace

TEST(Svd, RankOfProducts) {
  Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const int rows = 4 + static_cast<int>(rng.below(4));
    const int cols = 4 + static_cast<int>(rng.below(4));
    const int t = 1 + static_cast<int>(rng.below(3));
    const CMat m = random_matrix(rows, t, rng) * random_matrix(t, cols, rng);
    EXPECT_EQ(svd_rank(m), static_cast<std::size_t>(t));
    const auto ns = svd_nullspace(m);
    EXPECT_EQ(ns.nullity, static_cast<std::size_t>(cols - t));
    EXPECT_TRUE(ns.reliable);
    // basis vectors are in the kernel and orthonormal
    EXPECT_LT((m * ns.basis).norm(), 1e-8 * m.norm());
    EXPECT_LT((ns.basis.adjoint() * ns.basis - CMat::Identity(ns.nullity, ns.nullity)).norm(),
              1e-10);
  }
}

TEST(Svd, FullRankHasEmptyNullspace) {
  Rng rng(32);
  const CMat m = random_matrix(6, 4, rng);
  const auto ns = svd_nullspace(m);
  EXPECT_EQ(ns.nullity, 0u);
  EXPECT_EQ(ns.basis.cols(), 0);
  EXPECT_EQ(svd_rank(m), 4u);
}

TEST(Svd, ZeroMatrix) {
  const CMat m = CMat::Zero(3, 5);
  const auto ns = svd_nullspace(m);
  EXPECT_EQ(ns.nullity, 5u);
  EXPECT_EQ(svd_rank(m), 0u);
}

TEST(Svd, GapRatioFlagsAmbiguousCuts) {
  // singular values 1 and 1e-9 with tol 1e-8: decisive (ratio 1e9 vs cut)
  CMat m = CMat::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = 1e-9;
  const auto decisive = svd_nullspace(m);
  EXPECT_EQ(decisive.nullity, 1u);
  EXPECT_TRUE(decisive.reliable);

  // singular values 1 and 2e-8: just above the cut with a tiny margin
  m(1, 1) = 2e-8;
  const auto marginal = svd_nullspace(m);
  EXPECT_EQ(marginal.nullity, 0u);
  EXPECT_FALSE(marginal.reliable);
}

TEST(Svd, ComplexRowReduce) {
  Rng rng(33);
  const CMat left = random_matrix(5, 2, rng), right = random_matrix(2, 4, rng);
  const auto rr = complex_row_reduce(left * right);
  EXPECT_EQ(rr.rank, 2u);
  ASSERT_EQ(rr.pivots.size(), 2u);
  EXPECT_LT(rr.pivots[0], rr.pivots[1]);
}
