#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "br/bigint.hpp"
#include "br/partition.hpp"

namespace br {

// Full character table of the symmetric group S_d.  Characters are computed
// by the Murnaghan-Nakayama rule in column form: for a conjugacy class mu,
// all values chi_lambda(mu) are produced in one dynamic-programming pass that
// inserts border strips of sizes mu_1, mu_2, ... starting from the empty
// partition, tracking signs.  Strip insertion is done on beta-numbers (first
// column hook lengths), which makes both the enumeration and the height sign
// O(d) per candidate.
class CharacterTable {
public:
  explicit CharacterTable(int d);

  int degree() const { return d_; }
  std::size_t size() const { return parts_.size(); } // number of classes
  const std::vector<Partition>& partitions() const { return parts_; }

  std::size_t index_of(const Partition& p) const;

  // chi_lambda evaluated on the class of cycle type mu
  std::int64_t chi(std::size_t lambda, std::size_t mu) const {
    return table_[lambda * parts_.size() + mu];
  }
  std::int64_t chi(const Partition& lambda, const Partition& mu) const {
    return chi(index_of(lambda), index_of(mu));
  }

  const Int& class_size(std::size_t mu) const { return class_sizes_[mu]; }

private:
  int d_;
  std::vector<Partition> parts_;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<Int> class_sizes_;
  std::vector<std::int64_t> table_;
};

// Single character value chi_lambda(mu); |lambda| must equal |mu|.
// Backed by a process-wide cache of full tables per degree.
std::int64_t mn_character(const Partition& lambda, const Partition& mu);

// Shared table cache (also used by the Kronecker coefficient computation).
const CharacterTable& character_table(int d);

// |C_mu| = d! / prod_i i^{m_i} m_i!
Int conjugacy_class_size(const Partition& mu);

} // namespace br
