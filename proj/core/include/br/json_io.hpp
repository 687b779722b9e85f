#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "br/hwv.hpp"
#include "br/ideal.hpp"
#include "br/tensor.hpp"

namespace br {

// Insertion-ordered JSON keeps output layouts stable across runs.
using Json = nlohmann::ordered_json;

// Permutations cross the JSON boundary 1-indexed (the external convention);
// in-memory Perms stay 0-indexed.
Json perm_to_json(const Perm& p);
Perm perm_from_json(const Json& j);

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json hwv_to_json(const HWVPoly& p);
HWVPoly hwv_from_json(const Json& j);

Json decomposition_to_json(const Decomposition<std::int64_t>& w);
Decomposition<std::int64_t> decomposition_from_json(const Json& j);

Json tensor_to_json(const Tensor3<std::int64_t>& t);

// cpp_int values are emitted as plain numbers when they fit in int64 and as
// decimal strings otherwise; both forms are accepted on input
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

Json basis_result_to_json(const HWVBasisResult& r);

Json kernel_to_json(const VanishingKernel& k);
VanishingKernel kernel_from_json(const Json& j);

Json certificate_to_json(const Certificate& c);

// Standard output envelope: {"result": ..., "meta": {...}}.  Everything
// under "result" is byte-stable for a fixed seed and configuration; "meta"
// carries wall time and tool metadata and is excluded from such guarantees.
Json make_envelope(Json result, std::uint64_t seed, const std::vector<std::uint64_t>& primes,
                   std::int64_t wall_ms);

void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

// Named basis file: shape triple plus permutation pairs.
struct BasisFile {
  Partition pi, mu, nu;
  std::vector<HWVPoly> polys;
};
BasisFile basis_from_json(const Json& j);
Json basis_to_json(const BasisFile& b);

// Witness archive: parametrization spec, slice coefficients, points with
// residuals.  Reloadable to resume monodromy or run membership; the
// parametrization is rebuilt from its spec string.
struct PseudoWitnessSet;
Json witness_to_json(const PseudoWitnessSet& pw);
PseudoWitnessSet witness_from_json(const Json& j);

} // namespace br
