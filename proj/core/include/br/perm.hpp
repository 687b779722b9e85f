#pragma once

#include <vector>

#include "br/rng.hpp"

namespace br {

// Permutation of {0, ..., d-1} in one-line notation: perm[i] is the image of
// i.  External formats (JSON, CLI) are 1-indexed; conversion happens at the
// boundary.
using Perm = std::vector<int>;

Perm identity_perm(int d);
bool is_permutation(const Perm& p);
Perm inverse_perm(const Perm& p);
Perm random_perm(int d, Rng& rng); // Fisher-Yates

// 1-indexed <-> 0-indexed (validates)
Perm perm_from_one_indexed(const std::vector<int>& images);
std::vector<int> perm_to_one_indexed(const Perm& p);

} // namespace br
