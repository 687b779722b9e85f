#include "br/kronecker.hpp"

#include <stdexcept>

#include "br/bigint.hpp"
#include "br/characters.hpp"

namespace br {

std::uint64_t kronecker(const Partition& pi, const Partition& mu, const Partition& nu) {
  const int d = pi.weight();
  if (mu.weight() != d || nu.weight() != d)
    throw std::invalid_argument("kronecker: partition weights differ");
  const CharacterTable& t = character_table(d);
  const std::size_t pi_i = t.index_of(pi), mu_i = t.index_of(mu), nu_i = t.index_of(nu);

  Int acc = 0;
  for (std::size_t c = 0; c < t.size(); ++c) {
    const Int term = Int(t.chi(pi_i, c)) * t.chi(mu_i, c) * t.chi(nu_i, c);
    acc += t.class_size(c) * term;
  }
  const Int dfact = factorial(static_cast<unsigned>(d));
  if (acc % dfact != 0)
    throw std::logic_error("kronecker: sum not divisible by d!");
  Int k = acc / dfact;
  if (k < 0) throw std::logic_error("kronecker: negative multiplicity");
  return static_cast<std::uint64_t>(k);
}

} // namespace br
