#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "br/bigint.hpp"
#include "br/fp.hpp"
#include "br/hwv.hpp"
#include "br/rng.hpp"
#include "br/tensor.hpp"

namespace br {

struct VanishingKernelOptions {
  std::size_t n_points = 0;  // 0 -> 2k + 4
  bool auto_grow = true;     // double the point count until the kernel dimension
                             // agrees across two successive sizes
  int max_doublings = 4;
  unsigned threads = 0;
  int eval_split_depth = 3;
};

// Kernel data over a single prime field.
struct PrimeKernel {
  std::uint64_t prime = 0;
  std::size_t n_points = 0;
  std::size_t rank = 0;
  std::vector<std::vector<std::uint64_t>> kernel; // left kernel basis mod prime
};

// Left kernel of the k x n evaluation matrix at random rank-r points:
// coefficient vectors c with sum_i c_i P_i vanishing at every sample.
// A zero kernel is exact evidence (a nonvanishing witness point exists);
// a nonzero kernel is a candidate certified separately.
struct VanishingKernel {
  Partition pi, mu, nu;
  std::vector<HWVPoly> basis;
  int r = 0;
  std::uint64_t seed = 0;
  std::vector<PrimeKernel> per_prime;
  std::size_t dimension = 0;  // common kernel dimension
  bool stable = false;        // point-growth converged (or growth disabled)
  bool consistent = false;    // all primes agree on the dimension
  // For dimension 1: primitive integer kernel vector (gcd 1, largest entry
  // by absolute value positive), reconstructed from the modular kernels.
  std::vector<Int> integer_kernel;
  bool reconstructed = false;
};

VanishingKernel vanishing_kernel(const std::vector<HWVPoly>& basis, int r,
                                 const std::vector<std::uint64_t>& primes, Rng& rng,
                                 const VanishingKernelOptions& opt = {});

// Border-rank certificate for one target tensor.
//
// The rigorous half: the kernel polynomial Q = sum c_i P_i has integer
// coefficients once the P_i are scaled integrally, so Q(target) != 0 modulo
// any prime proves Q(target) != 0 over the integers, hence target lies
// outside every variety Q vanishes on.  The probabilistic half: Q vanishing
// at fresh random rank-r samples supports (but does not prove) Q being in
// the ideal of sigma_r.
struct Certificate {
  std::string target_name;
  int r = 0;
  int d = 0;
  Partition pi, mu, nu;
  std::vector<HWVPoly> basis;
  std::vector<Int> kernel_vector;
  std::vector<std::uint64_t> primes;
  std::vector<std::uint64_t> eval_at_target; // one value per prime
  std::size_t sigma_checks = 0;              // per prime
  bool sigma_all_zero = false;
  bool nonzero_at_target = false;
  std::string verdict; // "border_rank_gt_<r>" or "no_conclusion"
};

struct CertifyOptions {
  std::size_t sigma_checks = 50;
  unsigned threads = 0;
  int eval_split_depth = 3;
};

Certificate certify(const VanishingKernel& kernel, const Decomposition<std::int64_t>& target,
                    const std::string& target_name, const std::vector<std::uint64_t>& primes,
                    Rng& rng, const CertifyOptions& opt = {});

} // namespace br
