#include "br/perm.hpp"

#include <stdexcept>

namespace br {

Perm identity_perm(int d) {
  Perm p(d);
  for (int i = 0; i < d; ++i) p[i] = i;
  return p;
}

bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Perm inverse_perm(const Perm& p) {
  Perm inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

Perm random_perm(int d, Rng& rng) {
  Perm p = identity_perm(d);
  for (int i = d - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i + 1)));
    std::swap(p[i], p[j]);
  }
  return p;
}

Perm perm_from_one_indexed(const std::vector<int>& images) {
  Perm p(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) p[i] = images[i] - 1;
  if (!is_permutation(p))
    throw std::invalid_argument("perm_from_one_indexed: not a permutation");
  return p;
}

std::vector<int> perm_to_one_indexed(const Perm& p) {
  std::vector<int> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i] + 1;
  return out;
}

} // namespace br
