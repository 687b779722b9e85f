#include "br/bigint.hpp"

#include <boost/multiprecision/integer.hpp>
#include <stdexcept>

namespace br {

std::optional<RatRecon> rational_reconstruct(const Int& a0, const Int& m) {
  if (m <= 1) return std::nullopt;
  Int bound = boost::multiprecision::sqrt(Int(m / 2));
  if (bound < 1) bound = 1;

  Int a = a0 % m;
  if (a < 0) a += m;

  // r_{k} = s_k * m + t_k * a; stop at the first remainder <= bound.
  Int r0 = m, r1 = a;
  Int t0 = 0, t1 = 1;
  while (r1 > bound) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  Int num = r1, den = t1;
  if (den < 0) { den = -den; num = -num; }
  if (den == 0 || den > bound) return std::nullopt;
  if (boost::multiprecision::gcd(den, m) != 1) return std::nullopt;
  // verify num = a*den (mod m)
  Int check = (num - a * den) % m;
  if (check != 0) return std::nullopt;
  Int g = boost::multiprecision::gcd(boost::multiprecision::abs(num), den);
  if (g > 1) { num /= g; den /= g; }
  return RatRecon{num, den};
}

Int crt_pair(const Int& a1, const Int& m1, const Int& a2, const Int& m2) {
  // x = a1 + m1 * k with k = (a2 - a1) / m1 (mod m2)
  Int m1inv = 0, t = 0;
  // extended Euclid for m1^{-1} mod m2
  {
    Int r0 = m2, r1 = m1 % m2, t0 = 0, t1 = 1;
    while (r1 != 0) {
      Int q = r0 / r1;
      Int r2 = r0 - q * r1;
      Int t2 = t0 - q * t1;
      r0 = r1; r1 = r2;
      t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw std::invalid_argument("crt_pair: moduli not coprime");
    m1inv = t0 % m2;
    if (m1inv < 0) m1inv += m2;
  }
  Int k = ((a2 - a1) % m2) * m1inv % m2;
  if (k < 0) k += m2;
  Int x = a1 + m1 * k;
  Int mm = m1 * m2;
  x %= mm;
  if (x < 0) x += mm;
  (void)t;
  return x;
}

std::vector<Int> primitive_integer_vector(const std::vector<Rat>& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  using boost::multiprecision::gcd;
  using boost::multiprecision::abs;

  Int lcm = 1;
  for (const Rat& x : v) {
    Int d = denominator(x);
    lcm = lcm / gcd(lcm, d) * d;
  }
  std::vector<Int> out;
  out.reserve(v.size());
  for (const Rat& x : v) out.push_back(numerator(x) * (lcm / denominator(x)));

  Int g = 0;
  for (const Int& x : out) g = gcd(g, abs(x));
  if (g > 1)
    for (Int& x : out) x /= g;

  // sign: largest-|.| entry positive (first such on ties)
  std::size_t arg = 0;
  Int best = -1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    Int a = abs(out[i]);
    if (a > best) { best = a; arg = i; }
  }
  if (!out.empty() && out[arg] < 0)
    for (Int& x : out) x = -x;
  return out;
}

} // namespace br
