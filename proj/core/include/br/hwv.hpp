#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "br/bigint.hpp"
#include "br/fp.hpp"
#include "br/grouping.hpp"
#include "br/partition.hpp"
#include "br/perm.hpp"
#include "br/rng.hpp"
#include "br/tensor.hpp"

namespace br {

// A highest weight vector polynomial of degree d = |pi| = |mu| = |nu| on
// A (x) B (x) C, determined by the shape triple and a pair of permutations:
//   F = F_pi (x) (tau1 . F_mu) (x) (tau2 . F_nu)
// contracted against w^{(x)d}.  Only this compressed form is ever stored;
// the polynomial itself is never expanded into monomials.
struct HWVPoly {
  Partition pi, mu, nu;
  Perm tau1, tau2;

  int d() const { return pi.weight(); }
  void check() const;
};

// Precomputed evaluation plan: the three slot groupings (B and C groups are
// tau1(G), tau2(G) with original factor order kept), a visitation order
// chosen greedily (next slot = the one sharing groups with the most
// already-visited slots, ties to the smallest index), and per-step
// bookkeeping for the DFS.
struct EvalPlan {
  HWVPoly poly;

  struct Group {
    int side;               // 0 = A, 1 = B, 2 = C
    int size;
    std::vector<int> slots; // original factor order; determinant column order
  };
  struct SideRef {
    int group;
    int col;
    bool completes;
  };
  struct Step {
    int slot;
    std::array<SideRef, 3> side;
  };

  std::vector<Group> groups;
  std::vector<Step> steps;
  std::array<int, 3> length{}; // number of coordinates read per side
  int max_group_size = 0;
};

EvalPlan build_plan(const HWVPoly& p);

// Contract the (unsymmetrized, unnormalized) tensor F against w^{(x)d} over
// F_p: a sum over slot-to-term assignments of products of one g x g
// determinant per group, with two exact cuts -- a repeated determinant
// column inside any partially filled group prunes at assignment time, and a
// zero determinant prunes at group completion.  Equals the symmetrized
// polynomial up to a nonzero constant that depends only on (d, pi, mu, nu),
// hence requires p > d.  Deterministic for any thread count.
std::uint64_t evaluate(const EvalPlan& plan, const Decomposition<std::uint64_t>& w,
                       const PrimeField& F, unsigned threads = 1, int split_depth = 3);
std::uint64_t evaluate(const HWVPoly& p, const Decomposition<std::uint64_t>& w,
                       const PrimeField& F, unsigned threads = 1);

// Exact rational evaluation (small cases / cross-checks).
Rat evaluate(const EvalPlan& plan, const Decomposition<Rat>& w);
Rat evaluate(const HWVPoly& p, const Decomposition<Rat>& w);

struct HWVBasisOptions {
  std::uint64_t pair_budget_factor = 50; // candidate pairs <= factor * k
  int initial_rank = 0;                  // 0: max column length of the shapes
  std::uint64_t zero_pattern_budget = 1000000;
  unsigned threads = 1;
};

struct HWVBasisResult {
  Partition pi, mu, nu;
  std::uint64_t k_target = 0; // Kronecker coefficient
  std::vector<HWVPoly> basis;
  bool complete = false;    // basis.size() == k_target
  bool zero_module = false; // k = 0
  int sample_rank = 0;      // final independence-point rank
  std::size_t points_used = 0;
  std::size_t candidates_tried = 0;
};

// Random search for a basis of the highest weight vector space of type
// (pi, mu, nu): draw permutation pairs avoiding zero patterns and keep those
// whose evaluation rows at random low-rank sample points are independent
// (full-rank evaluation matrix implies independence; exact over F_p).  The
// sample rank starts at the max column length and escalates when
// independence testing stalls, up to the generic-rank bound of the ambient
// space -- combinations vanishing on a small secant variety are invisible at
// points of that rank.
HWVBasisResult hwv_basis(const Partition& pi, const Partition& mu, const Partition& nu,
                         const PrimeField& F, Rng& rng, const HWVBasisOptions& opt = {});

} // namespace br
