#include "br/weyl.hpp"

#include <stdexcept>

#include "br/bigint.hpp"

namespace br {

std::uint64_t weyl_dim(const Partition& pi, int n) {
  if (n < 1) throw std::invalid_argument("weyl_dim: n must be >= 1");
  if (pi.length() > n)
    throw std::invalid_argument("weyl_dim: partition has more parts than the dimension");
  Int num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= pi.part(i) - pi.part(j) + j - i;
      den *= j - i;
    }
  const Int q = num / den;
  if (num % den != 0) throw std::logic_error("weyl_dim: non-integral product");
  if (q > Int(UINT64_MAX)) throw std::overflow_error("weyl_dim: result exceeds 64 bits");
  return static_cast<std::uint64_t>(q);
}

std::uint64_t isotypic_dimension(const Partition& pi, const Partition& mu, const Partition& nu,
                                 int a, int b, int c) {
  const Int d = Int(weyl_dim(pi, a)) * weyl_dim(mu, b) * weyl_dim(nu, c);
  if (d > Int(UINT64_MAX)) throw std::overflow_error("isotypic_dimension: result exceeds 64 bits");
  return static_cast<std::uint64_t>(d);
}

} // namespace br
