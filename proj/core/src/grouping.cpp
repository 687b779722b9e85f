#include "br/grouping.hpp"

#include <stdexcept>

namespace br {

ColumnGrouping column_grouping(const Partition& pi) {
  ColumnGrouping g;
  g.d = pi.weight();
  int slot = 0;
  const int len = pi.length();
  for (int j = 1; j <= len; ++j) {
    const int count = pi.part(j - 1) - pi.part(j); // blocks of size j
    for (int b = 0; b < count; ++b) {
      std::vector<int> grp(j);
      for (int t = 0; t < j; ++t) grp[t] = slot++;
      g.groups.push_back(std::move(grp));
    }
  }
  return g;
}

ColumnGrouping relocate(const ColumnGrouping& g, const Perm& tau) {
  if (static_cast<int>(tau.size()) != g.d)
    throw std::invalid_argument("relocate: permutation degree mismatch");
  ColumnGrouping out;
  out.d = g.d;
  out.groups.reserve(g.groups.size());
  for (const auto& grp : g.groups) {
    std::vector<int> moved(grp.size());
    for (std::size_t i = 0; i < grp.size(); ++i) moved[i] = tau[grp[i]];
    out.groups.push_back(std::move(moved));
  }
  return out;
}

bool has_zero_pattern(const Partition& pi, const Partition& mu, const Partition& nu,
                      const Perm& tau1, const Perm& tau2) {
  const int d = pi.weight();
  if (mu.weight() != d || nu.weight() != d)
    throw std::invalid_argument("has_zero_pattern: weights differ");
  if (static_cast<int>(tau1.size()) != d || static_cast<int>(tau2.size()) != d)
    throw std::invalid_argument("has_zero_pattern: permutation degree mismatch");

  const std::vector<int> ga = column_grouping(pi).slot_to_group();
  const std::vector<int> gb = relocate(column_grouping(mu), tau1).slot_to_group();
  const std::vector<int> gc = relocate(column_grouping(nu), tau2).slot_to_group();

  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (ga[i] == ga[j] && gb[i] == gb[j] && gc[i] == gc[j]) return true;
  return false;
}

std::optional<std::pair<Perm, Perm>> random_pair_avoiding_zero_pattern(
    const Partition& pi, const Partition& mu, const Partition& nu, Rng& rng,
    std::uint64_t budget) {
  const int d = pi.weight();
  for (std::uint64_t trial = 0; trial < budget; ++trial) {
    Perm t1 = random_perm(d, rng);
    Perm t2 = random_perm(d, rng);
    if (!has_zero_pattern(pi, mu, nu, t1, t2))
      return std::make_pair(std::move(t1), std::move(t2));
  }
  return std::nullopt;
}

} // namespace br
