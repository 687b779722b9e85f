#pragma once

#include <cstdint>

#include "br/partition.hpp"

namespace br {

// Dimension of the irreducible GL_n representation with highest weight pi
// (pi padded with zeros to length n):
//   prod_{1<=i<j<=n} (p_i - p_j + j - i) / (j - i).
// Exact; throws if pi has more than n parts or the result overflows 64 bits.
std::uint64_t weyl_dim(const Partition& pi, int n);

// dim S_pi(A) * dim S_mu(B) * dim S_nu(C) for ambient dims (a, b, c): the
// dimension of one isotypic block of degree-d polynomials.
std::uint64_t isotypic_dimension(const Partition& pi, const Partition& mu, const Partition& nu,
                                 int a, int b, int c);

} // namespace br
