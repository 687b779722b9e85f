#include "br/hwv.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

#include "br/kronecker.hpp"
#include "br/linalg.hpp"
#include "br/parallel.hpp"

namespace br {

void HWVPoly::check() const {
  const int dd = pi.weight();
  if (mu.weight() != dd || nu.weight() != dd)
    throw std::invalid_argument("HWVPoly: shape weights differ");
  if (static_cast<int>(tau1.size()) != dd || static_cast<int>(tau2.size()) != dd)
    throw std::invalid_argument("HWVPoly: permutation degree mismatch");
  if (!is_permutation(tau1) || !is_permutation(tau2))
    throw std::invalid_argument("HWVPoly: tau is not a permutation");
}

EvalPlan build_plan(const HWVPoly& p) {
  p.check();
  const int d = p.d();
  EvalPlan plan;
  plan.poly = p;
  plan.length = {p.pi.length(), p.mu.length(), p.nu.length()};

  const ColumnGrouping raw[3] = {column_grouping(p.pi),
                                 relocate(column_grouping(p.mu), p.tau1),
                                 relocate(column_grouping(p.nu), p.tau2)};

  // slot -> (global group id, column position) per side
  std::array<std::vector<int>, 3> slot_group, slot_col;
  for (int s = 0; s < 3; ++s) {
    slot_group[s].assign(d, -1);
    slot_col[s].assign(d, -1);
    for (const auto& grp : raw[s].groups) {
      const int gid = static_cast<int>(plan.groups.size());
      plan.groups.push_back({s, static_cast<int>(grp.size()), grp});
      plan.max_group_size = std::max(plan.max_group_size, static_cast<int>(grp.size()));
      for (std::size_t c = 0; c < grp.size(); ++c) {
        slot_group[s][grp[c]] = gid;
        slot_col[s][grp[c]] = static_cast<int>(c);
      }
    }
  }

  // greedy most-constrained visitation order: prefer the slot whose three
  // groups have the most already-visited members, so the duplicate-column
  // cut binds as early as possible
  std::vector<char> visited(d, 0);
  std::vector<int> order;
  order.reserve(d);
  for (int step = 0; step < d; ++step) {
    int best = -1, best_score = -1;
    for (int slot = 0; slot < d; ++slot) {
      if (visited[slot]) continue;
      int score = 0;
      for (int s = 0; s < 3; ++s)
        for (int other : plan.groups[slot_group[s][slot]].slots)
          if (visited[other]) ++score;
      if (score > best_score) {
        best_score = score;
        best = slot;
      }
    }
    visited[best] = 1;
    order.push_back(best);
  }

  std::vector<int> filled(plan.groups.size(), 0);
  plan.steps.reserve(d);
  for (int slot : order) {
    EvalPlan::Step st;
    st.slot = slot;
    for (int s = 0; s < 3; ++s) {
      const int gid = slot_group[s][slot];
      st.side[s] = {gid, slot_col[s][slot], ++filled[gid] == plan.groups[gid].size};
    }
    plan.steps.push_back(st);
  }
  return plan;
}

namespace {

struct FpOps {
  PrimeField F;
  using V = std::uint64_t;
  V zero() const { return 0; }
  V one() const { return 1; }
  V add(V a, V b) const { return F.add(a, b); }
  V sub(V a, V b) const { return F.sub(a, b); }
  V mul(V a, V b) const { return F.mul(a, b); }
  V inv(V a) const { return F.inv(a); }
  V neg(V a) const { return F.neg(a); }
  static bool is_zero(V a) { return a == 0; }
};

struct RatOps {
  using V = Rat;
  V zero() const { return V(0); }
  V one() const { return V(1); }
  V add(const V& a, const V& b) const { return a + b; }
  V sub(const V& a, const V& b) const { return a - b; }
  V mul(const V& a, const V& b) const { return a * b; }
  V inv(const V& a) const { return V(1) / a; }
  V neg(const V& a) const { return -a; }
  static bool is_zero(const V& a) { return a == 0; }
};

std::uint64_t binom_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * static_cast<std::uint64_t>(n - i) / (i + 1);
  return r;
}

// colex rank of the set of bits in mask among all sets of the same size:
// for bits b1 < b2 < ... < bg the rank is sum of C(b_i, i)
inline std::uint64_t comb_rank(std::uint64_t mask, const std::uint64_t* binom_rows) {
  std::uint64_t rank = 0;
  int i = 1;
  while (mask) {
    const int b = __builtin_ctzll(mask);
    rank += binom_rows[b * 21 + i];
    mask &= mask - 1;
    ++i;
  }
  return rank;
}

// All evaluation state that is constant across the search: column classes,
// precomputed minors of class representatives, and plan bookkeeping.
//
// Every size-g group on a side reads the same top g rows of that side's
// r columns, so the determinant of a completed group is (up to the sign of
// the column order) one of C(#classes, g) precomputed minors, indexed by the
// set of column classes in the group.
template <class Ops>
struct Shared {
  using V = typename Ops::V;
  const EvalPlan& plan;
  Ops ops;
  int d, r;
  std::array<int, 3> len;
  std::array<std::vector<V>, 3> coords; // r x len[s], row-major by term

  struct SizeInfo {
    std::vector<std::uint8_t> cls; // class id per term; ids are dense from 0
    int n_classes = 0;
    std::vector<int> rep;          // representative term per class
    std::vector<V> minors;         // det of top-g rows at class sets, colex order
  };
  std::array<std::vector<SizeInfo>, 3> size_info; // [side][group size]

  struct GroupRef {
    const std::uint8_t* cls;
    const V* minors;
    int goff;
    int size;
  };
  std::vector<GroupRef> gref;
  std::vector<std::uint64_t> binom; // C(n, k) for n <= 64, k <= 20, flat n*21+k
  int chosen_size = 0;

  template <class Coord>
  Shared(const EvalPlan& pl, const Decomposition<Coord>& w, Ops o)
      : plan(pl), ops(std::move(o)), d(pl.poly.d()), r(w.rank()) {
    len = pl.length;
    if (w.a < len[0] || w.b < len[1] || w.c < len[2])
      throw std::invalid_argument("evaluate: decomposition dims below shape lengths");
    if (r > 64) throw std::invalid_argument("evaluate: more than 64 rank-one terms");
    w.check();

    binom.assign(65 * 21, 0);
    for (int n = 0; n <= 64; ++n)
      for (int k = 0; k <= 20; ++k) binom[n * 21 + k] = binom_u64(n, k);

    for (int s = 0; s < 3; ++s) coords[s].assign(static_cast<std::size_t>(r) * len[s], ops.zero());
    for (int t = 0; t < r; ++t) {
      const auto& term = w.terms[t];
      for (int i = 0; i < len[0]; ++i) coords[0][t * len[0] + i] = V(term.u[i]);
      for (int i = 0; i < len[1]; ++i) coords[1][t * len[1] + i] = V(term.v[i]);
      for (int i = 0; i < len[2]; ++i) coords[2][t * len[2] + i] = V(term.w[i]);
    }

    for (int s = 0; s < 3; ++s) size_info[s].resize(len[s] + 1);
    for (const auto& grp : plan.groups)
      if (size_info[grp.side][grp.size].cls.empty()) build_size_info(grp.side, grp.size);

    gref.resize(plan.groups.size());
    for (std::size_t g = 0; g < plan.groups.size(); ++g) {
      const auto& grp = plan.groups[g];
      const auto& si = size_info[grp.side][grp.size];
      gref[g] = {si.cls.data(), si.minors.data(), chosen_size, grp.size};
      chosen_size += grp.size;
    }
  }

  void build_size_info(int s, int g) {
    auto& si = size_info[s][g];
    si.cls.assign(r, 0);
    for (int t = 0; t < r; ++t) {
      int found = -1;
      for (int c = 0; c < si.n_classes && found < 0; ++c) {
        bool eq = true;
        for (int i = 0; i < g && eq; ++i)
          eq = coords[s][t * len[s] + i] == coords[s][si.rep[c] * len[s] + i];
        if (eq) found = c;
      }
      if (found < 0) {
        found = si.n_classes++;
        si.rep.push_back(t);
      }
      si.cls[t] = static_cast<std::uint8_t>(found);
    }
    if (si.n_classes < g) return; // no group of this size can ever complete

    // minors over all g-subsets of classes, enumerated in colex order
    const std::uint64_t count = binom[si.n_classes * 21 + g];
    si.minors.reserve(count);
    std::vector<int> pick(g);
    for (int i = 0; i < g; ++i) pick[i] = i;
    while (true) {
      si.minors.push_back(top_minor(s, g, si, pick));
      int i = 0;
      while (i + 1 < g && pick[i] + 1 == pick[i + 1]) ++i;
      if (pick[i] + 1 >= si.n_classes) break;
      ++pick[i];
      for (int j = 0; j < i; ++j) pick[j] = j;
    }
  }

  V top_minor(int s, int g, const SizeInfo& si, const std::vector<int>& pick) const {
    std::vector<V> m(static_cast<std::size_t>(g) * g);
    for (int col = 0; col < g; ++col)
      for (int row = 0; row < g; ++row)
        m[row * g + col] = coords[s][si.rep[pick[col]] * len[s] + row];
    V det = ops.one();
    bool neg = false;
    for (int col = 0; col < g; ++col) {
      int pr = col;
      while (pr < g && Ops::is_zero(m[pr * g + col])) ++pr;
      if (pr == g) return ops.zero();
      if (pr != col) {
        for (int c = col; c < g; ++c) std::swap(m[col * g + c], m[pr * g + c]);
        neg = !neg;
      }
      det = ops.mul(det, m[col * g + col]);
      const V pinv = ops.inv(m[col * g + col]);
      for (int row = col + 1; row < g; ++row) {
        if (Ops::is_zero(m[row * g + col])) continue;
        const V f = ops.mul(m[row * g + col], pinv);
        for (int c = col; c < g; ++c)
          m[row * g + c] = ops.sub(m[row * g + c], ops.mul(f, m[col * g + c]));
      }
    }
    return neg ? ops.neg(det) : det;
  }
};

template <class Ops>
struct Walker {
  using V = typename Ops::V;
  const Shared<Ops>& S;
  std::vector<std::uint64_t> mask;   // per group: class bits in use
  std::vector<std::uint8_t> chosen;  // per group column: class id
  V acc;

  explicit Walker(const Shared<Ops>& sh)
      : S(sh), mask(sh.plan.groups.size(), 0), chosen(sh.chosen_size, 0), acc(sh.ops.zero()) {}

  // determinant of a completed group: colex-indexed minor of its class set,
  // negated when the column order is an odd permutation of sorted class order
  V det_group(int g) const {
    const auto& ref = S.gref[g];
    bool neg = false;
    for (int i = 1; i < ref.size; ++i)
      for (int j = 0; j < i; ++j)
        if (chosen[ref.goff + j] > chosen[ref.goff + i]) neg = !neg;
    const V& m = ref.minors[comb_rank(mask[g], S.binom.data())];
    return neg ? S.ops.neg(m) : m;
  }

  // commits one step; returns false (fully unwound) on duplicate class or
  // zero completed determinant, otherwise multiplies prod by completions
  bool apply(int k, int t, V& prod) {
    const auto& st = S.plan.steps[k];
    std::uint64_t bits[3];
    for (int s = 0; s < 3; ++s) {
      const auto& ref = st.side[s];
      const std::uint8_t c = S.gref[ref.group].cls[t];
      bits[s] = 1ULL << c;
      if (mask[ref.group] & bits[s]) {
        for (int u = 0; u < s; ++u) mask[st.side[u].group] &= ~bits[u];
        return false;
      }
      mask[ref.group] |= bits[s];
      chosen[S.gref[ref.group].goff + ref.col] = c;
    }
    for (int s = 0; s < 3; ++s) {
      const auto& ref = st.side[s];
      if (!ref.completes) continue;
      const V dv = det_group(ref.group);
      if (Ops::is_zero(dv)) {
        undo(k, bits);
        return false;
      }
      prod = S.ops.mul(prod, dv);
    }
    return true;
  }

  void undo(int k, const std::uint64_t bits[3]) {
    const auto& st = S.plan.steps[k];
    for (int s = 0; s < 3; ++s) mask[st.side[s].group] &= ~bits[s];
  }

  void dfs(int k, const V& prod) {
    if (k == S.d) {
      acc = S.ops.add(acc, prod);
      return;
    }
    const auto& st = S.plan.steps[k];
    std::uint64_t bits[3];
    for (int t = 0; t < S.r; ++t) {
      V np = prod;
      if (!apply_inline(st, t, np, bits)) continue;
      dfs(k + 1, np);
      undo(k, bits);
    }
  }

private:
  bool apply_inline(const EvalPlan::Step& st, int t, V& prod, std::uint64_t bits[3]) {
    for (int s = 0; s < 3; ++s) {
      const auto& ref = st.side[s];
      const std::uint8_t c = S.gref[ref.group].cls[t];
      bits[s] = 1ULL << c;
      if (mask[ref.group] & bits[s]) {
        for (int u = 0; u < s; ++u) mask[st.side[u].group] &= ~bits[u];
        return false;
      }
      mask[ref.group] |= bits[s];
      chosen[S.gref[ref.group].goff + ref.col] = c;
    }
    for (int s = 0; s < 3; ++s) {
      const auto& ref = st.side[s];
      if (!ref.completes) continue;
      const V dv = det_group(ref.group);
      if (Ops::is_zero(dv)) {
        for (int u = 0; u < 3; ++u) mask[st.side[u].group] &= ~bits[u];
        return false;
      }
      prod = S.ops.mul(prod, dv);
    }
    return true;
  }
};

template <class Ops>
typename Ops::V evaluate_impl(const Shared<Ops>& S, unsigned threads, int split_depth) {
  using V = typename Ops::V;
  if (S.r == 0) return S.ops.zero();

  threads = resolve_threads(threads);
  const int q = std::min({split_depth, S.d, 12});
  if (threads <= 1 || q <= 0) {
    Walker<Ops> w(S);
    w.dfs(0, S.ops.one());
    return w.acc;
  }

  // enumerate surviving depth-q prefixes, then replay them across workers
  std::vector<std::array<int, 12>> tasks;
  {
    Walker<Ops> w(S);
    std::array<int, 12> pre{};
    std::function<void(int)> rec = [&](int k) {
      if (k == q) {
        tasks.push_back(pre);
        return;
      }
      for (int t = 0; t < S.r; ++t) {
        V prod = S.ops.one();
        std::uint64_t bits[3];
        const auto& st = S.plan.steps[k];
        bool ok = true;
        for (int s = 0; s < 3; ++s) {
          const auto& ref = st.side[s];
          bits[s] = 1ULL << S.gref[ref.group].cls[t];
          if (w.mask[ref.group] & bits[s]) {
            for (int u = 0; u < s; ++u) w.mask[st.side[u].group] &= ~bits[u];
            ok = false;
            break;
          }
          w.mask[ref.group] |= bits[s];
          w.chosen[S.gref[ref.group].goff + ref.col] = S.gref[ref.group].cls[t];
        }
        if (!ok) continue;
        pre[k] = t;
        rec(k + 1);
        w.undo(k, bits);
        (void)prod;
      }
    };
    rec(0);
  }

  std::vector<V> partial(tasks.size(), S.ops.zero());
  parallel_for(tasks.size(), threads, [&](std::size_t ti) {
    Walker<Ops> w(S);
    V prod = S.ops.one();
    bool alive = true;
    for (int k = 0; k < q && alive; ++k) alive = w.apply(k, tasks[ti][k], prod);
    if (alive) {
      w.dfs(q, prod);
      partial[ti] = w.acc;
    }
  });
  V total = S.ops.zero();
  for (const V& v : partial) total = S.ops.add(total, v);
  return total;
}

} // namespace

std::uint64_t evaluate(const EvalPlan& plan, const Decomposition<std::uint64_t>& w,
                       const PrimeField& F, unsigned threads, int split_depth) {
  if (F.modulus() <= static_cast<std::uint64_t>(plan.poly.d()))
    throw std::invalid_argument("evaluate: field characteristic must exceed the degree");
  for (const auto& term : w.terms)
    for (const auto* vec : {&term.u, &term.v, &term.w})
      for (std::uint64_t x : *vec)
        if (x >= F.modulus()) throw std::invalid_argument("evaluate: entry not reduced mod p");
  Shared<FpOps> S(plan, w, FpOps{F});
  return evaluate_impl(S, threads, split_depth);
}

std::uint64_t evaluate(const HWVPoly& p, const Decomposition<std::uint64_t>& w,
                       const PrimeField& F, unsigned threads) {
  return evaluate(build_plan(p), w, F, threads);
}

Rat evaluate(const EvalPlan& plan, const Decomposition<Rat>& w) {
  Shared<RatOps> S(plan, w, RatOps{});
  return evaluate_impl(S, 1, 0);
}

Rat evaluate(const HWVPoly& p, const Decomposition<Rat>& w) {
  return evaluate(build_plan(p), w);
}

HWVBasisResult hwv_basis(const Partition& pi, const Partition& mu, const Partition& nu,
                         const PrimeField& F, Rng& rng, const HWVBasisOptions& opt) {
  HWVBasisResult res;
  res.pi = pi;
  res.mu = mu;
  res.nu = nu;
  res.k_target = kronecker(pi, mu, nu);
  if (res.k_target == 0) {
    res.zero_module = true;
    res.complete = true;
    return res;
  }
  const int k = static_cast<int>(res.k_target);
  const int a = pi.length(), b = mu.length(), c = nu.length();

  int rank = opt.initial_rank > 0 ? opt.initial_rank : std::max({a, b, c});
  // beyond the generic rank, points are no better (they are already dense)
  const int rank_cap = std::max(
      rank, static_cast<int>((static_cast<long>(a) * b * c + (a + b + c - 3)) / (a + b + c - 2)));

  std::vector<Decomposition<std::uint64_t>> points;
  std::vector<std::vector<std::uint64_t>> rows; // accepted evaluation rows
  std::vector<EvalPlan> plans;

  auto draw_points = [&](std::size_t n) {
    while (points.size() < n) points.push_back(random_decomposition(a, b, c, rank, F, rng));
  };
  auto extend_rows = [&]() {
    for (std::size_t i = 0; i < plans.size(); ++i)
      for (std::size_t j = rows[i].size(); j < points.size(); ++j)
        rows[i].push_back(evaluate(plans[i], points[j], F, opt.threads));
  };
  auto rebuild_points = [&]() {
    points.clear();
    draw_points(static_cast<std::size_t>(k) + 3);
    for (auto& row : rows) row.clear();
    extend_rows();
  };

  draw_points(static_cast<std::size_t>(k) + 3);

  const std::uint64_t budget = opt.pair_budget_factor * res.k_target;
  int rejections = 0;
  while (res.basis.size() < res.k_target && res.candidates_tried < budget) {
    auto pair = random_pair_avoiding_zero_pattern(pi, mu, nu, rng, opt.zero_pattern_budget);
    if (!pair) break; // zero-pattern sampling budget exhausted
    ++res.candidates_tried;
    HWVPoly cand{pi, mu, nu, pair->first, pair->second};
    EvalPlan plan = build_plan(cand);
    std::vector<std::uint64_t> row(points.size());
    for (std::size_t j = 0; j < points.size(); ++j)
      row[j] = evaluate(plan, points[j], F, opt.threads);

    // exact rank test: accepted rows plus the candidate
    FpMatrix m(F, rows.size() + 1, points.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < points.size(); ++j) m.at(i, j) = rows[i][j];
    for (std::size_t j = 0; j < points.size(); ++j) m.at(rows.size(), j) = row[j];
    const std::size_t rk = row_reduce(m).rank;

    if (rk == rows.size() + 1) {
      res.basis.push_back(std::move(cand));
      plans.push_back(std::move(plan));
      rows.push_back(std::move(row));
      rejections = 0;
      continue;
    }

    ++rejections;
    if (rejections % 3 == 0 && points.size() < static_cast<std::size_t>(k) + 7) {
      draw_points(points.size() + 2); // rule out an unlucky point set first
      extend_rows();
    } else if (rejections >= 6 && rank < rank_cap) {
      ++rank; // combinations may vanish identically at this sample rank
      rebuild_points();
      rejections = 0;
    }
  }

  res.complete = res.basis.size() == res.k_target;
  res.sample_rank = rank;
  res.points_used = points.size();
  return res;
}

} // namespace br
