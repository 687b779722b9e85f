#include <gtest/gtest.h>

#include "br/linalg.hpp"
#include "br/rng.hpp"
#include "br/tensor.hpp"

using namespace br;

TEST(Tensor, ExpandMatmulIsKroneckerDelta) {
  // M_{m,n,p} entry at ((i,j'), (j,k'), (k,i')) is [i==i'][j==j'][k==k']
  const int m = 2, n = 3, p = 2;
  const auto d = matmul_decomposition<std::int64_t>(m, n, p);
  EXPECT_EQ(d.rank(), m * n * p);
  const auto t = expand(d);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      for (int jj = 0; jj < n; ++jj)
        for (int k = 0; k < p; ++k)
          for (int kk = 0; kk < p; ++kk)
            for (int ii = 0; ii < m; ++ii) {
              const std::int64_t want = (i == ii && j == jj && k == kk) ? 1 : 0;
              EXPECT_EQ(t.at(i * n + j, jj * p + k, kk * m + ii), want);
            }
}

TEST(Tensor, ExpandIsBilinearInTerms) {
  Rng rng(61);
  const PrimeField F;
  const auto d1 = random_decomposition(3, 2, 4, 2, F, rng);
  const auto d2 = random_decomposition(3, 2, 4, 3, F, rng);
  Decomposition<std::uint64_t> cat = d1;
  cat.terms.insert(cat.terms.end(), d2.terms.begin(), d2.terms.end());
  const auto t1 = expand_fp(d1, F), t2 = expand_fp(d2, F), tc = expand_fp(cat, F);
  for (std::size_t i = 0; i < tc.x.size(); ++i) ASSERT_EQ(tc.x[i], F.add(t1.x[i], t2.x[i]));
}

TEST(Tensor, ExpandInvariantUnderTermOrder) {
  Rng rng(62);
  const PrimeField F;
  auto d = random_decomposition(2, 3, 2, 4, F, rng);
  const auto t = expand_fp(d, F);
  std::swap(d.terms[0], d.terms[3]);
  std::swap(d.terms[1], d.terms[2]);
  EXPECT_EQ(expand_fp(d, F).x, t.x);
}

TEST(Tensor, RandomDecompositionDeterministicAndReduced) {
  const PrimeField F;
  Rng a(7), b(7);
  const auto d1 = random_decomposition(4, 4, 4, 6, F, a);
  const auto d2 = random_decomposition(4, 4, 4, 6, F, b);
  ASSERT_EQ(d1.rank(), 6);
  for (int s = 0; s < 6; ++s) {
    EXPECT_EQ(d1.terms[s].u, d2.terms[s].u);
    EXPECT_EQ(d1.terms[s].v, d2.terms[s].v);
    EXPECT_EQ(d1.terms[s].w, d2.terms[s].w);
    for (auto x : d1.terms[s].u) EXPECT_LT(x, F.modulus());
    for (auto x : d1.terms[s].v) EXPECT_LT(x, F.modulus());
    for (auto x : d1.terms[s].w) EXPECT_LT(x, F.modulus());
  }
}

TEST(Tensor, FlatteningRankBoundsDecompositionRank) {
  // the A-flattening of a rank-r decomposition has rank <= r, with equality
  // for generic terms when r <= min(a, bc)
  Rng rng(63);
  for (int r = 1; r <= 3; ++r) {
    const auto d = random_rational_decomposition(3, 3, 3, r, rng);
    const auto t = expand(d);
    std::vector<std::vector<Rat>> flat(3, std::vector<Rat>(9));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) flat[i][j * 3 + k] = Rat(t.at(i, j, k));
    EXPECT_EQ(row_reduce(flat, 9).rank, static_cast<std::size_t>(r));
  }
}

TEST(Tensor, ReduceModMatchesEntrywise) {
  Rng rng(64);
  const PrimeField F;
  const auto d = random_rational_decomposition(2, 2, 3, 2, rng);
  Decomposition<std::int64_t> di;
  di.a = d.a;
  di.b = d.b;
  di.c = d.c;
  for (const auto& term : d.terms) {
    RankOneTerm<std::int64_t> ti;
    for (const auto& x : term.u) ti.u.push_back(static_cast<std::int64_t>(numerator(x)));
    for (const auto& x : term.v) ti.v.push_back(static_cast<std::int64_t>(numerator(x)));
    for (const auto& x : term.w) ti.w.push_back(static_cast<std::int64_t>(numerator(x)));
    di.terms.push_back(std::move(ti));
  }
  const auto dm = reduce_mod(di, F);
  const auto tm = expand_fp(dm, F);
  const auto ti = expand(di);
  const auto tr = reduce_mod(ti, F);
  EXPECT_EQ(tm.x, tr.x);
}

TEST(Tensor, DimensionMismatchRejected) {
  Decomposition<std::int64_t> d;
  d.a = 2;
  d.b = 2;
  d.c = 2;
  RankOneTerm<std::int64_t> t;
  t.u = {1, 0};
  t.v = {1};
  t.w = {1, 0};
  d.terms.push_back(t);
  EXPECT_THROW(d.check(), std::invalid_argument);
}
