// borderrank: equations for secant varieties of Segre varieties and
// border-rank certificates, plus numerical witness-set utilities.
//
// Subcommands
//   kron       Kronecker coefficient and isotypic dimension for a shape triple
//   hwv-basis  random search for a basis of the highest weight vector space
//   vanish     left kernel of the basis evaluation matrix at random rank-r points
//   certify    border-rank certificate for a target tensor from a kernel file
//   nag        numerical algebraic geometry: degree | member | mindeg
//
// Every run is driven by a single root seed; each command forks its own
// stream, so outputs are reproducible per (command, config, seed).  Exit
// codes: 0 success, 2 completed but inconclusive, 1 error.

#include <chrono>
#include <cstdint>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "br/fp.hpp"
#include "br/hwv.hpp"
#include "br/ideal.hpp"
#include "br/interpolate.hpp"
#include "br/json_io.hpp"
#include "br/kronecker.hpp"
#include "br/parallel.hpp"
#include "br/parametrization.hpp"
#include "br/partition.hpp"
#include "br/rng.hpp"
#include "br/tensor.hpp"
#include "br/version.hpp"
#include "br/weyl.hpp"
#include "br/witness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;

struct GlobalOpts {
  std::uint64_t seed = 1;
  std::vector<std::uint64_t> primes{br::PrimeField::default_prime,
                                    br::PrimeField::companion_prime};
  unsigned threads = 0; // 0: BORDERRANK_THREADS env, then hardware
  std::string out;
};

br::Json primes_json(const std::vector<std::uint64_t>& primes) {
  br::Json j = br::Json::array();
  for (auto p : primes) j.push_back(p);
  return j;
}

void emit(const GlobalOpts& g, br::Json result,
          std::chrono::steady_clock::time_point t0) {
  const auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  const br::Json envelope = br::make_envelope(std::move(result), g.seed, g.primes, wall);
  if (g.out.empty())
    std::cout << envelope.dump(2) << std::endl;
  else
    br::write_json_file(g.out, envelope);
}

// Accept both raw payloads and report envelopes written by other commands:
// descend into "result" and then into `key` when present.
br::Json unwrap(br::Json j, const char* key) {
  if (j.contains("result")) j = j.at("result");
  if (j.contains(key)) j = j.at(key);
  return j;
}

br::Partition parse_partition(const std::vector<int>& parts, const std::string& flag) {
  if (parts.empty()) throw CLI::ValidationError(flag, "partition must be nonempty");
  return br::Partition(parts);
}

// "m,n,p" -> {m, n, p}
std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

// --- kron -----------------------------------------------------------------

int cmd_kron(const GlobalOpts& g, const std::vector<int>& pi_in, const std::vector<int>& mu_in,
             const std::vector<int>& nu_in, const std::vector<int>& dims_in) {
  const auto t0 = std::chrono::steady_clock::now();
  const br::Partition pi = parse_partition(pi_in, "--pi");
  const br::Partition mu = parse_partition(mu_in, "--mu");
  const br::Partition nu = parse_partition(nu_in, "--nu");

  int a = pi.length(), b = mu.length(), c = nu.length();
  if (!dims_in.empty()) {
    if (dims_in.size() != 3) throw CLI::ValidationError("--dims", "expected a,b,c");
    a = dims_in[0];
    b = dims_in[1];
    c = dims_in[2];
  }

  const std::uint64_t k = br::kronecker(pi, mu, nu);
  const std::uint64_t iso = br::isotypic_dimension(pi, mu, nu, a, b, c);

  br::Json result;
  result["config"] = {{"command", "kron"},
                      {"pi", br::partition_to_json(pi)},
                      {"mu", br::partition_to_json(mu)},
                      {"nu", br::partition_to_json(nu)},
                      {"dims", {a, b, c}}};
  result["kronecker"] = k;
  result["weyl_dims"] = {br::weyl_dim(pi, a), br::weyl_dim(mu, b), br::weyl_dim(nu, c)};
  result["isotypic_dimension"] = iso;
  std::cerr << "k = " << k << ", isotypic block dimension " << iso << " in dims (" << a << ", "
            << b << ", " << c << ")\n";
  emit(g, std::move(result), t0);
  return kExitOk;
}

// --- hwv-basis --------------------------------------------------------------

int cmd_hwv_basis(const GlobalOpts& g, const std::vector<int>& pi_in,
                  const std::vector<int>& mu_in, const std::vector<int>& nu_in,
                  std::uint64_t pair_budget) {
  const auto t0 = std::chrono::steady_clock::now();
  const br::Partition pi = parse_partition(pi_in, "--pi");
  const br::Partition mu = parse_partition(mu_in, "--mu");
  const br::Partition nu = parse_partition(nu_in, "--nu");

  const br::PrimeField F(g.primes.front());
  br::Rng rng = br::Rng(g.seed).fork("hwv-basis");
  br::HWVBasisOptions opt;
  opt.pair_budget_factor = pair_budget;
  opt.threads = br::resolve_threads(g.threads);
  const auto res = br::hwv_basis(pi, mu, nu, F, rng, opt);

  br::Json result;
  result["config"] = {{"command", "hwv-basis"},
                      {"pi", br::partition_to_json(pi)},
                      {"mu", br::partition_to_json(mu)},
                      {"nu", br::partition_to_json(nu)},
                      {"prime", F.modulus()},
                      {"pair_budget_factor", pair_budget}};
  result.update(br::basis_result_to_json(res));
  std::cerr << "k = " << res.k_target << ", basis pairs found: " << res.basis.size()
            << (res.complete ? "" : " (incomplete)") << "\n";
  emit(g, std::move(result), t0);
  if (res.zero_module || res.complete) return kExitOk;
  return kExitInconclusive;
}

// --- vanish -----------------------------------------------------------------

int cmd_vanish(const GlobalOpts& g, const std::string& basis_path,
               const std::vector<int>& pi_in, const std::vector<int>& mu_in,
               const std::vector<int>& nu_in, int r, std::size_t n_points,
               bool allow_vacuous) {
  const auto t0 = std::chrono::steady_clock::now();
  br::Rng root(g.seed);

  std::vector<br::HWVPoly> basis;
  br::Json basis_echo;
  if (!basis_path.empty()) {
    const auto bf = br::basis_from_json(unwrap(br::read_json_file(basis_path), "basis"));
    basis = bf.polys;
    basis_echo = basis_path;
  } else {
    const br::Partition pi = parse_partition(pi_in, "--pi");
    const br::Partition mu = parse_partition(mu_in, "--mu");
    const br::Partition nu = parse_partition(nu_in, "--nu");
    const br::PrimeField F(g.primes.front());
    br::Rng rng = root.fork("hwv-basis");
    br::HWVBasisOptions opt;
    opt.threads = br::resolve_threads(g.threads);
    const auto res = br::hwv_basis(pi, mu, nu, F, rng, opt);
    if (!res.complete && !res.zero_module) {
      std::cerr << "basis search incomplete: " << res.basis.size() << " of " << res.k_target
                << " pairs\n";
      return kExitInconclusive;
    }
    basis = res.basis;
    basis_echo = "(searched inline)";
  }
  if (basis.empty()) {
    std::cerr << "the highest weight vector space is zero; nothing to intersect\n";
    return kExitError;
  }

  const int a = basis[0].pi.length(), b = basis[0].mu.length(), c = basis[0].nu.length();
  const auto codim = br::expected_codim(a, b, c, r);
  if (codim <= 0 && !allow_vacuous) {
    std::cerr << "expected codimension of sigma_" << r << " in (" << a << ", " << b << ", " << c
              << ") is " << codim
              << " <= 0: the variety is expected to fill the ambient space, so the search is "
                 "vacuous.  Pass --allow-vacuous to run it anyway.\n";
    return kExitError;
  }

  br::Rng rng = root.fork("vanish");
  br::VanishingKernelOptions opt;
  opt.n_points = n_points;
  opt.threads = br::resolve_threads(g.threads);
  const auto kernel = br::vanishing_kernel(basis, r, g.primes, rng, opt);

  br::Json result;
  result["config"] = {{"command", "vanish"}, {"basis", basis_echo},   {"r", r},
                      {"dims", {a, b, c}},   {"expected_codim", codim}};
  result["kernel"] = br::kernel_to_json(kernel);
  std::cerr << "kernel dimension " << kernel.dimension << " over " << g.primes.size()
            << " prime(s)" << (kernel.consistent ? "" : " (primes disagree!)")
            << (kernel.stable ? "" : " (point growth not converged)") << "\n";
  emit(g, std::move(result), t0);
  return kernel.consistent && kernel.stable ? kExitOk : kExitInconclusive;
}

// --- certify ----------------------------------------------------------------

br::Decomposition<std::int64_t> parse_target(const std::string& spec, int a, int b, int c,
                                             br::Rng& rng, std::string& name) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  if (head == "matmul") {
    const auto mnp = parse_int_list(spec.substr(colon + 1));
    if (mnp.size() != 3) throw CLI::ValidationError("--target", "matmul:m,n,p");
    name = "matmul:" + std::to_string(mnp[0]) + "," + std::to_string(mnp[1]) + "," +
           std::to_string(mnp[2]);
    return br::matmul_decomposition<std::int64_t>(mnp[0], mnp[1], mnp[2]);
  }
  if (head == "random-rank") {
    const int r = std::stoi(spec.substr(colon + 1));
    name = "random-rank:" + std::to_string(r);
    br::Decomposition<std::int64_t> d;
    d.a = a;
    d.b = b;
    d.c = c;
    for (int s = 0; s < r; ++s) {
      br::RankOneTerm<std::int64_t> term;
      for (int i = 0; i < a; ++i) term.u.push_back(rng.range(-99, 99));
      for (int j = 0; j < b; ++j) term.v.push_back(rng.range(-99, 99));
      for (int k = 0; k < c; ++k) term.w.push_back(rng.range(-99, 99));
      d.terms.push_back(std::move(term));
    }
    return d;
  }
  throw CLI::ValidationError("--target", "expected matmul:m,n,p or random-rank:r");
}

int cmd_certify(const GlobalOpts& g, const std::string& kernel_path, const std::string& target_spec,
                std::size_t checks) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto kernel = br::kernel_from_json(unwrap(br::read_json_file(kernel_path), "kernel"));

  br::Rng root(g.seed);
  br::Rng target_rng = root.fork("target");
  std::string name;
  const auto target = parse_target(target_spec, kernel.pi.length(), kernel.mu.length(),
                                   kernel.nu.length(), target_rng, name);

  br::Rng rng = root.fork("certify");
  br::CertifyOptions opt;
  opt.sigma_checks = checks;
  opt.threads = br::resolve_threads(g.threads);
  const auto cert = br::certify(kernel, target, name, g.primes, rng, opt);

  br::Json result;
  result["config"] = {{"command", "certify"},
                      {"kernel", kernel_path},
                      {"target", name},
                      {"sigma_checks", checks}};
  result["certificate"] = br::certificate_to_json(cert);
  std::cerr << "verdict: " << cert.verdict << "\n";
  emit(g, std::move(result), t0);
  return cert.verdict == "no_conclusion" ? kExitInconclusive : kExitOk;
}

// --- nag --------------------------------------------------------------------

struct NagOpts {
  std::string example;
  std::string sigma;
  int rounds = 64;
  std::string archive;    // write the witness set here
  std::string archive_in; // resume from a previous archive
};

br::Parametrization nag_variety(const NagOpts& n) {
  if (!n.example.empty() && !n.sigma.empty())
    throw CLI::ValidationError("--example/--sigma", "choose one variety");
  if (!n.example.empty()) return br::parse_variety_spec(n.example);
  if (!n.sigma.empty()) return br::parse_variety_spec("sigma:" + n.sigma);
  throw CLI::ValidationError("nag", "a variety is required (--example or --sigma)");
}

br::Json witness_summary(const br::PseudoWitnessSet& pw, const br::MonodromyReport& rep) {
  double worst = 0.0;
  for (const auto& p : pw.points) worst = std::max(worst, p.residual);
  br::Json j;
  j["variety"] = pw.map.name;
  j["dim"] = pw.dim;
  j["fiber_dim"] = pw.fiber_dim;
  j["degree"] = pw.points.size();
  j["max_residual"] = worst;
  j["monodromy"] = {{"rounds", rep.rounds},
                    {"new_points", rep.new_points},
                    {"failures", rep.failures},
                    {"stabilized", rep.stabilized}};
  return j;
}

// Build (or reload) a witness set and expand it by monodromy.
br::PseudoWitnessSet nag_witness(const NagOpts& n, br::Rng& rng, const br::WitnessOptions& wopt,
                                 br::MonodromyReport& rep) {
  br::PseudoWitnessSet pw;
  if (!n.archive_in.empty())
    pw = br::witness_from_json(br::read_json_file(n.archive_in));
  else
    pw = br::pseudo_witness(nag_variety(n), rng, wopt);
  rep = br::monodromy_expand(pw, n.rounds, rng, wopt);
  return pw;
}

int cmd_nag_degree(const GlobalOpts& g, const NagOpts& n) {
  const auto t0 = std::chrono::steady_clock::now();
  br::Rng rng = br::Rng(g.seed).fork("nag");
  const br::WitnessOptions wopt;
  br::MonodromyReport rep;
  auto pw = nag_witness(n, rng, wopt, rep);
  pw.seed = g.seed;
  const auto trace = br::trace_test(pw, rng, wopt);

  br::Json result;
  result["config"] = {{"command", "nag degree"},
                      {"variety", pw.map.name},
                      {"rounds", n.rounds}};
  result.update(witness_summary(pw, rep));
  result["trace"] = {{"outcome", br::to_string(trace.outcome)},
                     {"residual", trace.residual},
                     {"scale", trace.scale},
                     {"failures", trace.failures}};
  if (!n.archive.empty()) br::write_json_file(n.archive, br::witness_to_json(pw));
  std::cerr << "degree " << pw.points.size() << ", trace test: " << br::to_string(trace.outcome)
            << "\n";
  emit(g, std::move(result), t0);
  return trace.outcome == br::Outcome::Yes ? kExitOk : kExitInconclusive;
}

int cmd_nag_member(const GlobalOpts& g, const NagOpts& n, const std::string& point_csv,
                   bool on_variety, bool random_point) {
  const auto t0 = std::chrono::steady_clock::now();
  br::Rng rng = br::Rng(g.seed).fork("nag");
  const br::WitnessOptions wopt;
  br::MonodromyReport rep;
  auto pw = nag_witness(n, rng, wopt, rep);
  const auto trace = br::trace_test(pw, rng, wopt);
  if (trace.outcome != br::Outcome::Yes) {
    std::cerr << "witness set failed the trace test; membership would be meaningless\n";
    return kExitInconclusive;
  }

  br::CVec target;
  std::string target_desc;
  const int m = pw.map.image_dim;
  if ((point_csv.empty() ? 0 : 1) + (on_variety ? 1 : 0) + (random_point ? 1 : 0) != 1)
    throw CLI::ValidationError("nag member",
                               "exactly one of --point, --on-variety, --random is required");
  if (!point_csv.empty()) {
    const auto coords = parse_int_list(point_csv);
    if (static_cast<int>(coords.size()) != m)
      throw CLI::ValidationError("--point", "expected " + std::to_string(m) + " coordinates");
    target = br::CVec::Zero(m);
    for (int i = 0; i < m; ++i) target[i] = br::Cplx(coords[i], 0.0);
    target_desc = point_csv;
  } else if (on_variety) {
    br::Rng trng = rng.fork("target");
    target = pw.map.eval(br::random_source_point(pw.map, trng));
    target_desc = "(image of a random source point)";
  } else {
    br::Rng trng = rng.fork("target");
    target = br::CVec::Zero(m);
    for (int i = 0; i < m; ++i) target[i] = br::random_complex(trng);
    target_desc = "(random ambient point)";
  }

  const auto mem = br::membership(pw, target, rng, wopt);

  br::Json result;
  result["config"] = {{"command", "nag member"},
                      {"variety", pw.map.name},
                      {"target", target_desc},
                      {"rounds", n.rounds}};
  result.update(witness_summary(pw, rep));
  result["membership"] = {{"outcome", br::to_string(mem.outcome)},
                          {"best_distance", mem.best_distance},
                          {"failures", mem.failures}};
  std::cerr << "membership: " << br::to_string(mem.outcome) << " (best distance "
            << mem.best_distance << ")\n";
  emit(g, std::move(result), t0);
  return mem.outcome == br::Outcome::Inconclusive ? kExitInconclusive : kExitOk;
}

int cmd_nag_mindeg(const GlobalOpts& g, const NagOpts& n, int dmax, std::size_t max_entries) {
  const auto t0 = std::chrono::steady_clock::now();
  br::Rng rng = br::Rng(g.seed).fork("nag");
  const auto map = nag_variety(n);

  br::MinDegreeOptions opt;
  opt.interp.homogeneous = map.cone;
  if (max_entries) opt.max_matrix_entries = max_entries;
  const auto sampler = [&map](br::Rng& r) { return map.eval(br::random_source_point(map, r)); };
  const auto report = br::min_vanishing_degree(sampler, dmax, rng, opt);

  br::Json result;
  result["config"] = {{"command", "nag mindeg"},
                      {"variety", map.name},
                      {"dmax", dmax},
                      {"homogeneous", map.cone}};
  result["found"] = report.found;
  result["degree"] = report.degree;
  result["last_completed"] = report.last_completed;
  result["budget_exceeded"] = report.budget_exceeded;
  br::Json per = br::Json::array();
  for (const auto& itp : report.per_degree)
    per.push_back({{"nullity", itp.nullity},
                   {"points", itp.points},
                   {"reliable", itp.reliable},
                   {"gap_ratio", itp.gap_ratio}});
  result["per_degree"] = std::move(per);
  if (report.found)
    std::cerr << "first vanishing degree: " << report.degree << "\n";
  else
    std::cerr << "no vanishing polynomials of degree <= " << report.last_completed << "\n";
  emit(g, std::move(result), t0);
  if (report.found) return kExitOk;
  return report.budget_exceeded ? kExitInconclusive : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"equations and border-rank certificates for secant varieties of Segre varieties"};
  app.require_subcommand(1);
  app.fallthrough(); // global flags may follow the subcommand

  GlobalOpts g;
  app.add_option("--seed", g.seed, "root seed for all randomness")->capture_default_str();
  app.add_option("--primes,--prime", g.primes, "prime moduli (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--threads", g.threads,
                 "worker threads (0: BORDERRANK_THREADS env, then hardware)");
  app.add_option("--out", g.out, "write the JSON report here instead of stdout");

  std::vector<int> pi, mu, nu, dims;
  std::uint64_t pair_budget = 50;
  std::string basis_path, kernel_path, target_spec, point_csv;
  int r = 0, dmax = 3;
  std::size_t n_points = 0, checks = 50, max_entries = 0;
  bool allow_vacuous = false, on_variety = false, random_point = false;
  NagOpts nopt;

  auto* kron = app.add_subcommand("kron", "Kronecker coefficient and isotypic dimension");
  kron->add_option("--pi", pi, "first partition")->delimiter(',')->required();
  kron->add_option("--mu", mu, "second partition")->delimiter(',')->required();
  kron->add_option("--nu", nu, "third partition")->delimiter(',')->required();
  kron->add_option("--dims", dims, "ambient dims a,b,c (default: partition lengths)")
      ->delimiter(',');

  auto* hwv = app.add_subcommand("hwv-basis", "search for a highest weight vector basis");
  hwv->add_option("--pi", pi, "first partition")->delimiter(',')->required();
  hwv->add_option("--mu", mu, "second partition")->delimiter(',')->required();
  hwv->add_option("--nu", nu, "third partition")->delimiter(',')->required();
  hwv->add_option("--pair-budget", pair_budget, "candidate pairs per basis element")
      ->capture_default_str();

  auto* vanish = app.add_subcommand("vanish", "kernel of the evaluation matrix at rank-r points");
  vanish->add_option("--basis", basis_path, "basis file (pi, mu, nu, pairs)");
  vanish->add_option("--pi", pi, "first partition (searched inline)")->delimiter(',');
  vanish->add_option("--mu", mu, "second partition")->delimiter(',');
  vanish->add_option("--nu", nu, "third partition")->delimiter(',');
  vanish->add_option("--r", r, "rank bound of the secant variety")->required();
  vanish->add_option("--points", n_points, "initial sample count (0: 2k + 4)");
  vanish->add_flag("--allow-vacuous", allow_vacuous,
                   "run even when the secant variety is expected to fill the ambient space");

  auto* certify = app.add_subcommand("certify", "border-rank certificate for a target tensor");
  certify->add_option("--kernel", kernel_path, "kernel file from vanish")->required();
  certify->add_option("--target", target_spec, "matmul:m,n,p or random-rank:r")->required();
  certify->add_option("--checks", checks, "fresh rank-r samples per prime")
      ->capture_default_str();

  auto* nag = app.add_subcommand("nag", "numerical witness sets");
  nag->require_subcommand(1);
  nag->add_option("--example", nopt.example, "twisted-cubic | x2-quartic | circle");
  nag->add_option("--sigma", nopt.sigma, "secant variety r:a,b,c");
  nag->add_option("--rounds", nopt.rounds, "monodromy round budget")->capture_default_str();

  auto* deg = nag->add_subcommand("degree", "witness set cardinality with trace test");
  deg->add_option("--archive", nopt.archive, "write the witness archive here");
  deg->add_option("--resume", nopt.archive_in, "resume from a witness archive");

  auto* member = nag->add_subcommand("member", "numerical membership test");
  member->add_option("--point", point_csv, "target coordinates (comma separated)");
  member->add_flag("--on-variety", on_variety, "target: image of a random source point");
  member->add_flag("--random", random_point, "target: random ambient point");
  member->add_option("--resume", nopt.archive_in, "resume from a witness archive");

  auto* mindeg = nag->add_subcommand("mindeg", "first degree with vanishing polynomials");
  mindeg->add_option("--dmax", dmax, "highest degree to try")->capture_default_str();
  mindeg->add_option("--max-entries", max_entries, "interpolation matrix entry budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (kron->parsed()) return cmd_kron(g, pi, mu, nu, dims);
    if (hwv->parsed()) return cmd_hwv_basis(g, pi, mu, nu, pair_budget);
    if (vanish->parsed())
      return cmd_vanish(g, basis_path, pi, mu, nu, r, n_points, allow_vacuous);
    if (certify->parsed()) return cmd_certify(g, kernel_path, target_spec, checks);
    if (deg->parsed()) return cmd_nag_degree(g, nopt);
    if (member->parsed()) return cmd_nag_member(g, nopt, point_csv, on_variety, random_point);
    if (mindeg->parsed()) return cmd_nag_mindeg(g, nopt, dmax, max_entries);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
