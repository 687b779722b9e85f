#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

namespace br {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(unsigned n) {
  Int f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

// Balanced rational reconstruction: find x/y with x = a*y (mod m),
// |x| <= bound, 0 < y <= bound, gcd(y, m) = 1.  Classical half-extended
// Euclid; bound defaults to floor(sqrt(m/2)) which makes the answer unique
// when it exists.
struct RatRecon {
  Int num;
  Int den;
};

std::optional<RatRecon> rational_reconstruct(const Int& a, const Int& m);

// Chinese remainder combination of residues a1 (mod m1), a2 (mod m2) with
// coprime moduli; result in [0, m1*m2).
Int crt_pair(const Int& a1, const Int& m1, const Int& a2, const Int& m2);

// Clear denominators and divide by the gcd; sign chosen so that the entry of
// largest absolute value is positive.  Zero vector stays zero.
std::vector<Int> primitive_integer_vector(const std::vector<Rat>& v);

} // namespace br
