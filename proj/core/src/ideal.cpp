#include "br/ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "br/linalg.hpp"

namespace br {

namespace {

// kernel vectors are projective; compare by cross products
bool projectively_equal_mod(const std::vector<Int>& w, const std::vector<std::uint64_t>& v,
                            const PrimeField& F) {
  if (w.size() != v.size()) return false;
  std::vector<std::uint64_t> wm(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    Int m = w[i] % Int(F.modulus());
    if (m < 0) m += Int(F.modulus());
    wm[i] = static_cast<std::uint64_t>(m);
  }
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (F.mul(wm[i], v[j]) != F.mul(wm[j], v[i])) return false;
  // exclude the degenerate all-zero reduction
  for (std::uint64_t x : wm)
    if (x) return true;
  return false;
}

std::optional<std::vector<Int>> reconstruct_single_prime(const std::vector<std::uint64_t>& v,
                                                         std::uint64_t p) {
  std::vector<Rat> rats(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto rec = rational_reconstruct(Int(v[i]), Int(p));
    if (!rec) return std::nullopt;
    rats[i] = Rat(rec->num, rec->den);
  }
  return primitive_integer_vector(rats);
}

std::optional<std::vector<Int>> reconstruct_crt(const std::vector<std::uint64_t>& v1,
                                                std::uint64_t p1,
                                                const std::vector<std::uint64_t>& v2,
                                                std::uint64_t p2) {
  if (v1.size() != v2.size()) return std::nullopt;
  const Int m = Int(p1) * Int(p2);
  std::vector<Rat> rats(v1.size());
  for (std::size_t i = 0; i < v1.size(); ++i) {
    const Int a = crt_pair(Int(v1[i]), Int(p1), Int(v2[i]), Int(p2));
    auto rec = rational_reconstruct(a, m);
    if (!rec) return std::nullopt;
    rats[i] = Rat(rec->num, rec->den);
  }
  return primitive_integer_vector(rats);
}

} // namespace

VanishingKernel vanishing_kernel(const std::vector<HWVPoly>& basis, int r,
                                 const std::vector<std::uint64_t>& primes, Rng& rng,
                                 const VanishingKernelOptions& opt) {
  if (basis.empty()) throw std::invalid_argument("vanishing_kernel: empty basis");
  if (primes.empty()) throw std::invalid_argument("vanishing_kernel: no primes");
  if (r < 1) throw std::invalid_argument("vanishing_kernel: rank bound must be positive");
  const std::size_t k = basis.size();
  for (const auto& p : basis) {
    p.check();
    if (p.pi.parts != basis[0].pi.parts || p.mu.parts != basis[0].mu.parts ||
        p.nu.parts != basis[0].nu.parts)
      throw std::invalid_argument("vanishing_kernel: mixed shape triples in basis");
  }

  VanishingKernel out;
  out.pi = basis[0].pi;
  out.mu = basis[0].mu;
  out.nu = basis[0].nu;
  out.basis = basis;
  out.r = r;

  const int a = out.pi.length(), b = out.mu.length(), c = out.nu.length();
  std::vector<EvalPlan> plans;
  plans.reserve(k);
  for (const auto& p : basis) plans.push_back(build_plan(p));

  for (std::uint64_t pv : primes) {
    const PrimeField F(pv);
    Rng prng = rng.fork(pv); // per-prime stream: fresh points for each field
    std::size_t n = opt.n_points ? opt.n_points : 2 * k + 4;

    std::vector<Decomposition<std::uint64_t>> pts;
    std::vector<std::vector<std::uint64_t>> rows(k);
    auto grow_to = [&](std::size_t target) {
      while (pts.size() < target) {
        pts.push_back(random_decomposition(a, b, c, r, F, prng));
        for (std::size_t i = 0; i < k; ++i)
          rows[i].push_back(
              evaluate(plans[i], pts.back(), F, opt.threads, opt.eval_split_depth));
      }
    };
    auto kernel_of_current = [&]() {
      FpMatrix m(F, pts.size(), k); // transpose: left kernel = right kernel of M^T
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < pts.size(); ++j) m.at(j, i) = rows[i][j];
      return row_reduce(m);
    };

    grow_to(n);
    auto rr = kernel_of_current();
    bool stable = !opt.auto_grow;
    for (int g = 0; opt.auto_grow && g < opt.max_doublings; ++g) {
      const std::size_t before = rr.kernel.size();
      grow_to(pts.size() * 2);
      rr = kernel_of_current();
      if (rr.kernel.size() == before) {
        stable = true;
        break;
      }
    }

    PrimeKernel pk;
    pk.prime = pv;
    pk.n_points = pts.size();
    pk.rank = rr.rank;
    pk.kernel = rr.kernel;
    out.per_prime.push_back(std::move(pk));
    out.stable = out.per_prime.size() == 1 ? stable : (out.stable && stable);
  }

  out.dimension = out.per_prime.front().kernel.size();
  out.consistent = true;
  for (const auto& pk : out.per_prime)
    if (pk.kernel.size() != out.dimension) out.consistent = false;

  if (out.consistent && out.dimension == 1) {
    // reconstruct a primitive integer vector and cross-check it against
    // every prime; fall back to a CRT lift when one prime is too small
    std::vector<std::vector<Int>> candidates;
    for (const auto& pk : out.per_prime)
      if (auto w = reconstruct_single_prime(pk.kernel[0], pk.prime)) candidates.push_back(*w);
    if (out.per_prime.size() >= 2) {
      if (auto w = reconstruct_crt(out.per_prime[0].kernel[0], out.per_prime[0].prime,
                                   out.per_prime[1].kernel[0], out.per_prime[1].prime))
        candidates.push_back(*w);
    }
    for (const auto& w : candidates) {
      bool ok = true;
      for (const auto& pk : out.per_prime)
        ok = ok && projectively_equal_mod(w, pk.kernel[0], PrimeField(pk.prime));
      if (ok) {
        out.integer_kernel = w;
        out.reconstructed = true;
        break;
      }
    }
  }
  return out;
}

Certificate certify(const VanishingKernel& kernel, const Decomposition<std::int64_t>& target,
                    const std::string& target_name, const std::vector<std::uint64_t>& primes,
                    Rng& rng, const CertifyOptions& opt) {
  if (kernel.dimension != 1 || !kernel.reconstructed)
    throw std::invalid_argument(
        "certify: needs a kernel of dimension 1 with a reconstructed integer vector");
  const auto& pi = kernel.pi;
  const auto& mu = kernel.mu;
  const auto& nu = kernel.nu;
  if (target.a < pi.length() || target.b < mu.length() || target.c < nu.length())
    throw std::invalid_argument("certify: target dimensions below shape lengths");

  Certificate cert;
  cert.target_name = target_name;
  cert.r = kernel.r;
  cert.d = pi.weight();
  cert.pi = pi;
  cert.mu = mu;
  cert.nu = nu;
  cert.basis = kernel.basis;
  cert.kernel_vector = kernel.integer_kernel;
  cert.primes = primes;
  cert.sigma_checks = opt.sigma_checks;

  const std::size_t k = kernel.basis.size();
  std::vector<EvalPlan> plans;
  plans.reserve(k);
  for (const auto& p : kernel.basis) plans.push_back(build_plan(p));

  bool all_sigma_zero = true;
  bool nonzero_somewhere = false;
  for (std::uint64_t pv : primes) {
    const PrimeField F(pv);
    std::vector<std::uint64_t> coeff(k);
    for (std::size_t i = 0; i < k; ++i) {
      Int m = kernel.integer_kernel[i] % Int(pv);
      if (m < 0) m += Int(pv);
      coeff[i] = static_cast<std::uint64_t>(m);
    }

    const auto tmod = reduce_mod(target, F);
    std::uint64_t q = 0;
    for (std::size_t i = 0; i < k; ++i)
      q = F.add(q, F.mul(coeff[i], evaluate(plans[i], tmod, F, opt.threads,
                                            opt.eval_split_depth)));
    cert.eval_at_target.push_back(q);
    if (q != 0) nonzero_somewhere = true;

    Rng prng = rng.fork(pv ^ 0x9e3779b97f4a7c15ULL); // fresh, not the kernel's points
    for (std::size_t s = 0; s < opt.sigma_checks; ++s) {
      const auto pt = random_decomposition(target.a, target.b, target.c, kernel.r, F, prng);
      std::uint64_t v = 0;
      for (std::size_t i = 0; i < k; ++i)
        v = F.add(v, F.mul(coeff[i], evaluate(plans[i], pt, F, opt.threads,
                                              opt.eval_split_depth)));
      if (v != 0) {
        all_sigma_zero = false;
        break;
      }
    }
  }

  cert.sigma_all_zero = all_sigma_zero;
  cert.nonzero_at_target = nonzero_somewhere;
  cert.verdict = (nonzero_somewhere && all_sigma_zero)
                     ? "border_rank_gt_" + std::to_string(kernel.r)
                     : "no_conclusion";
  return cert;
}

} // namespace br
