#pragma once

#include <cstdint>

#include "br/partition.hpp"

namespace br {

// Kronecker coefficient k_{pi,mu,nu}: multiplicity of the trivial character
// in chi_pi * chi_mu * chi_nu, computed as
//   (1/d!) sum_{classes rho} |C_rho| chi_pi(rho) chi_mu(rho) chi_nu(rho).
// All three weights must agree.  Exact (big-integer accumulation).
std::uint64_t kronecker(const Partition& pi, const Partition& mu, const Partition& nu);

} // namespace br
