#include "br/tensor.hpp"

namespace br {

Tensor3<std::uint64_t> expand_fp(const Decomposition<std::uint64_t>& d, const PrimeField& F) {
  d.check();
  Tensor3<std::uint64_t> t(d.a, d.b, d.c);
  for (const auto& term : d.terms)
    for (int i = 0; i < d.a; ++i) {
      if (term.u[i] == 0) continue;
      for (int j = 0; j < d.b; ++j) {
        const std::uint64_t uv = F.mul(term.u[i], term.v[j]);
        if (uv == 0) continue;
        for (int k = 0; k < d.c; ++k)
          t.at(i, j, k) = F.add(t.at(i, j, k), F.mul(uv, term.w[k]));
      }
    }
  return t;
}

Decomposition<std::uint64_t> random_decomposition(int a, int b, int c, int r,
                                                  const PrimeField& F, Rng& rng) {
  Decomposition<std::uint64_t> d;
  d.a = a; d.b = b; d.c = c;
  d.terms.resize(r);
  for (auto& t : d.terms) {
    t.u.resize(a);
    t.v.resize(b);
    t.w.resize(c);
    for (auto& x : t.u) x = F.random(rng);
    for (auto& x : t.v) x = F.random(rng);
    for (auto& x : t.w) x = F.random(rng);
  }
  return d;
}

Decomposition<Rat> random_rational_decomposition(int a, int b, int c, int r, Rng& rng) {
  Decomposition<Rat> d;
  d.a = a; d.b = b; d.c = c;
  d.terms.resize(r);
  for (auto& t : d.terms) {
    t.u.resize(a);
    t.v.resize(b);
    t.w.resize(c);
    for (auto& x : t.u) x = Rat(rng.range(-99, 99));
    for (auto& x : t.v) x = Rat(rng.range(-99, 99));
    for (auto& x : t.w) x = Rat(rng.range(-99, 99));
  }
  return d;
}

std::int64_t expected_codim(int a, int b, int c, int r) {
  return static_cast<std::int64_t>(a) * b * c -
         static_cast<std::int64_t>(r) * (a + b + c - 2);
}

Tensor3<std::uint64_t> reduce_mod(const Tensor3<std::int64_t>& t, const PrimeField& F) {
  Tensor3<std::uint64_t> out(t.a, t.b, t.c);
  for (std::size_t i = 0; i < t.x.size(); ++i) out.x[i] = F.reduce_int(t.x[i]);
  return out;
}

Decomposition<std::uint64_t> reduce_mod(const Decomposition<std::int64_t>& d, const PrimeField& F) {
  Decomposition<std::uint64_t> out;
  out.a = d.a; out.b = d.b; out.c = d.c;
  out.terms.resize(d.terms.size());
  for (std::size_t s = 0; s < d.terms.size(); ++s) {
    auto& t = out.terms[s];
    const auto& src = d.terms[s];
    t.u.resize(src.u.size());
    t.v.resize(src.v.size());
    t.w.resize(src.w.size());
    for (std::size_t i = 0; i < src.u.size(); ++i) t.u[i] = F.reduce_int(src.u[i]);
    for (std::size_t i = 0; i < src.v.size(); ++i) t.v[i] = F.reduce_int(src.v[i]);
    for (std::size_t i = 0; i < src.w.size(); ++i) t.w[i] = F.reduce_int(src.w[i]);
  }
  return out;
}

} // namespace br
