#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "br/bigint.hpp"
#include "br/fp.hpp"
#include "br/rng.hpp"

namespace br {

// Dense order-3 tensor, coefficients row-major in (i, j, k):
// index = (i*b + j)*c + k.
template <class S>
struct Tensor3 {
  int a = 0, b = 0, c = 0;
  std::vector<S> x;

  Tensor3() = default;
  Tensor3(int a_, int b_, int c_) : a(a_), b(b_), c(c_), x(static_cast<std::size_t>(a_) * b_ * c_, S(0)) {}

  S& at(int i, int j, int k) { return x[(static_cast<std::size_t>(i) * b + j) * c + k]; }
  const S& at(int i, int j, int k) const { return x[(static_cast<std::size_t>(i) * b + j) * c + k]; }
};

template <class S>
struct RankOneTerm {
  std::vector<S> u, v, w;
};

// Sum of rank-one terms u_s (x) v_s (x) w_s.
template <class S>
struct Decomposition {
  int a = 0, b = 0, c = 0;
  std::vector<RankOneTerm<S>> terms;

  int rank() const { return static_cast<int>(terms.size()); }

  void check() const {
    for (const auto& t : terms)
      if (static_cast<int>(t.u.size()) != a || static_cast<int>(t.v.size()) != b ||
          static_cast<int>(t.w.size()) != c)
        throw std::invalid_argument("Decomposition: term dimension mismatch");
  }
};

// expand: works for any ring-like scalar with + and *.
template <class S>
Tensor3<S> expand(const Decomposition<S>& d) {
  d.check();
  Tensor3<S> t(d.a, d.b, d.c);
  for (const auto& term : d.terms)
    for (int i = 0; i < d.a; ++i)
      for (int j = 0; j < d.b; ++j)
        for (int k = 0; k < d.c; ++k)
          t.at(i, j, k) = t.at(i, j, k) + term.u[i] * term.v[j] * term.w[k];
  return t;
}

// expand over a prime field (elements are raw uint64_t + context).
Tensor3<std::uint64_t> expand_fp(const Decomposition<std::uint64_t>& d, const PrimeField& F);

// Matrix multiplication tensor M_{m,n,p} as a rank-mnp decomposition with
// terms e_{ij} (x) e_{jk} (x) e_{ki}; dims (mn, np, pm), pairs row-major.
template <class S>
Decomposition<S> matmul_decomposition(int m, int n, int p) {
  Decomposition<S> d;
  d.a = m * n;
  d.b = n * p;
  d.c = p * m;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < p; ++k) {
        RankOneTerm<S> t;
        t.u.assign(d.a, S(0));
        t.v.assign(d.b, S(0));
        t.w.assign(d.c, S(0));
        t.u[i * n + j] = S(1);
        t.v[j * p + k] = S(1);
        t.w[k * m + i] = S(1);
        d.terms.push_back(std::move(t));
      }
  return d;
}

// Uniform random rank-r decomposition over F_p.
Decomposition<std::uint64_t> random_decomposition(int a, int b, int c, int r,
                                                  const PrimeField& F, Rng& rng);

// Random rational decomposition with integer entries in [-99, 99].
Decomposition<Rat> random_rational_decomposition(int a, int b, int c, int r, Rng& rng);

// Expected codimension of the r-th secant variety of the Segre of
// P^{a-1} x P^{b-1} x P^{c-1}: abc - r(a+b+c-2).  Non-positive means the
// variety is expected to fill the ambient space (vacuous equation search).
std::int64_t expected_codim(int a, int b, int c, int r);

// Reduce integer data into a prime field.
Tensor3<std::uint64_t> reduce_mod(const Tensor3<std::int64_t>& t, const PrimeField& F);
Decomposition<std::uint64_t> reduce_mod(const Decomposition<std::int64_t>& d, const PrimeField& F);

} // namespace br
