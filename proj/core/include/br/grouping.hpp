#pragma once

#include <optional>
#include <vector>

#include "br/partition.hpp"
#include "br/perm.hpp"

namespace br {

// Partition of the tensor slots {0,...,d-1} into the column blocks of the
// highest weight vector
//   F_pi = (a^1)^{(p_1-p_2)} (x) (a^1 ^ a^2)^{(p_2-p_3)} (x) ... ,
// i.e. for j = 1..len(pi) there are p_j - p_{j+1} consecutive blocks of size
// j, in that order: size-1 blocks first, the largest wedge blocks last.
// Each group lists its slots in the order of the corresponding tensor
// factors (ascending for an unpermuted grouping).
struct ColumnGrouping {
  std::vector<std::vector<int>> groups;
  int d = 0;

  // group id per slot, -1 if somehow uncovered (never for valid input)
  std::vector<int> slot_to_group() const {
    std::vector<int> g(d, -1);
    for (std::size_t i = 0; i < groups.size(); ++i)
      for (int s : groups[i]) g[s] = static_cast<int>(i);
    return g;
  }
};

ColumnGrouping column_grouping(const Partition& pi);

// Grouping of tau * F: the block occupying slots G moves to slots
// tau(G), elementwise, keeping the original factor order: factor j of a
// block is sent to slot tau(j).  This matches the published permutation
// pairs: writing tau(1),...,tau(d) columnwise into the diagram of the shape
// lists each relocated group as a column.
ColumnGrouping relocate(const ColumnGrouping& g, const Perm& tau);

// True iff some slot pair {i, j} lies in a single group of all three of
// column_grouping(pi), tau1(column_grouping(mu)), tau2(column_grouping(nu)).
// Such a pair forces the symmetrized polynomial to vanish identically
// (swapping the pair flips the sign of all three wedge factors at once).
bool has_zero_pattern(const Partition& pi, const Partition& mu, const Partition& nu,
                      const Perm& tau1, const Perm& tau2);

// Rejection-sample (tau1, tau2) uniformly among pairs without a zero
// pattern.  Returns nullopt if the budget is exhausted.
std::optional<std::pair<Perm, Perm>> random_pair_avoiding_zero_pattern(
    const Partition& pi, const Partition& mu, const Partition& nu, Rng& rng,
    std::uint64_t budget = 1000000);

} // namespace br
