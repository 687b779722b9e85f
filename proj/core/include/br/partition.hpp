#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace br {

// Integer partition: weakly decreasing positive parts.  The empty partition
// (weight 0) is allowed.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int weight() const;
  int length() const { return static_cast<int>(parts.size()); }
  int part(int i) const { return i < length() ? parts[i] : 0; } // 0-indexed, padded
  int max_part() const { return parts.empty() ? 0 : parts[0]; }

  Partition conjugate() const;

  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator!=(const Partition& o) const { return parts != o.parts; }
  bool operator<(const Partition& o) const { return parts < o.parts; }

  std::string to_string() const; // "5,5,5,4"; empty partition -> "0"
};

// Parse "5,5,5,4".  Throws on non-monotone or non-positive parts.
Partition parse_partition(const std::string& s);

// All partitions of d, descending lexicographic ("(d)" first, "(1^d)" last).
std::vector<Partition> all_partitions(int d);

// Number of standard Young tableaux (hook length formula); exact.
// Used as the dimension of the symmetric-group irrep.
std::uint64_t syt_count(const Partition& p);

} // namespace br
