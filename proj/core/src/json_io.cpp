#include "br/json_io.hpp"

#include <fstream>
#include <stdexcept>

#include "br/version.hpp"
#include "br/witness.hpp"

namespace br {

Json perm_to_json(const Perm& p) {
  return Json(perm_to_one_indexed(p));
}

Perm perm_from_json(const Json& j) {
  return perm_from_one_indexed(j.get<std::vector<int>>());
}

Json partition_to_json(const Partition& p) {
  return Json(p.parts);
}

Partition partition_from_json(const Json& j) {
  return Partition(j.get<std::vector<int>>());
}

Json hwv_to_json(const HWVPoly& p) {
  Json j;
  j["pi"] = partition_to_json(p.pi);
  j["mu"] = partition_to_json(p.mu);
  j["nu"] = partition_to_json(p.nu);
  j["tau1"] = perm_to_json(p.tau1);
  j["tau2"] = perm_to_json(p.tau2);
  return j;
}

HWVPoly hwv_from_json(const Json& j) {
  HWVPoly p{partition_from_json(j.at("pi")), partition_from_json(j.at("mu")),
            partition_from_json(j.at("nu")), perm_from_json(j.at("tau1")),
            perm_from_json(j.at("tau2"))};
  p.check();
  return p;
}

Json decomposition_to_json(const Decomposition<std::int64_t>& w) {
  Json j;
  j["a"] = w.a;
  j["b"] = w.b;
  j["c"] = w.c;
  Json terms = Json::array();
  for (const auto& t : w.terms) {
    Json jt;
    jt["u"] = t.u;
    jt["v"] = t.v;
    jt["w"] = t.w;
    terms.push_back(std::move(jt));
  }
  j["terms"] = std::move(terms);
  return j;
}

Decomposition<std::int64_t> decomposition_from_json(const Json& j) {
  Decomposition<std::int64_t> w;
  w.a = j.at("a").get<int>();
  w.b = j.at("b").get<int>();
  w.c = j.at("c").get<int>();
  for (const auto& jt : j.at("terms")) {
    RankOneTerm<std::int64_t> t;
    t.u = jt.at("u").get<std::vector<std::int64_t>>();
    t.v = jt.at("v").get<std::vector<std::int64_t>>();
    t.w = jt.at("w").get<std::vector<std::int64_t>>();
    w.terms.push_back(std::move(t));
  }
  w.check();
  return w;
}

Json tensor_to_json(const Tensor3<std::int64_t>& t) {
  Json j;
  j["a"] = t.a;
  j["b"] = t.b;
  j["c"] = t.c;
  j["entries"] = t.x;
  return j;
}

Json int_to_json(const Int& v) {
  static const Int lo = Int(std::numeric_limits<std::int64_t>::min());
  static const Int hi = Int(std::numeric_limits<std::int64_t>::max());
  if (v >= lo && v <= hi) return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("int_from_json: expected integer or decimal string");
}

Json basis_result_to_json(const HWVBasisResult& r) {
  Json j;
  j["pi"] = partition_to_json(r.pi);
  j["mu"] = partition_to_json(r.mu);
  j["nu"] = partition_to_json(r.nu);
  j["k"] = r.k_target;
  j["zero_module"] = r.zero_module;
  j["complete"] = r.complete;
  Json pairs = Json::array();
  for (const auto& p : r.basis) {
    Json jp;
    jp["tau1"] = perm_to_json(p.tau1);
    jp["tau2"] = perm_to_json(p.tau2);
    pairs.push_back(std::move(jp));
  }
  j["pairs"] = std::move(pairs);
  j["sample_rank"] = r.sample_rank;
  j["points_used"] = r.points_used;
  j["candidates_tried"] = r.candidates_tried;
  return j;
}

Json kernel_to_json(const VanishingKernel& k) {
  Json j;
  j["pi"] = partition_to_json(k.pi);
  j["mu"] = partition_to_json(k.mu);
  j["nu"] = partition_to_json(k.nu);
  Json pairs = Json::array();
  for (const auto& p : k.basis) {
    Json jp;
    jp["tau1"] = perm_to_json(p.tau1);
    jp["tau2"] = perm_to_json(p.tau2);
    pairs.push_back(std::move(jp));
  }
  j["pairs"] = std::move(pairs);
  j["r"] = k.r;
  j["dimension"] = k.dimension;
  j["stable"] = k.stable;
  j["consistent"] = k.consistent;
  Json per_prime = Json::array();
  for (const auto& pk : k.per_prime) {
    Json jp;
    jp["prime"] = pk.prime;
    jp["points"] = pk.n_points;
    jp["rank"] = pk.rank;
    jp["kernel"] = pk.kernel;
    per_prime.push_back(std::move(jp));
  }
  j["per_prime"] = std::move(per_prime);
  j["reconstructed"] = k.reconstructed;
  if (k.reconstructed) {
    Json kv = Json::array();
    for (const auto& v : k.integer_kernel) kv.push_back(int_to_json(v));
    j["kernel_vector"] = std::move(kv);
  }
  return j;
}

VanishingKernel kernel_from_json(const Json& j) {
  VanishingKernel k;
  k.pi = partition_from_json(j.at("pi"));
  k.mu = partition_from_json(j.at("mu"));
  k.nu = partition_from_json(j.at("nu"));
  for (const auto& jp : j.at("pairs")) {
    HWVPoly p{k.pi, k.mu, k.nu, perm_from_json(jp.at("tau1")), perm_from_json(jp.at("tau2"))};
    p.check();
    k.basis.push_back(std::move(p));
  }
  k.r = j.at("r").get<int>();
  k.dimension = j.at("dimension").get<std::size_t>();
  k.stable = j.at("stable").get<bool>();
  k.consistent = j.at("consistent").get<bool>();
  if (j.contains("per_prime"))
    for (const auto& jp : j.at("per_prime")) {
      PrimeKernel pk;
      pk.prime = jp.at("prime").get<std::uint64_t>();
      pk.n_points = jp.at("points").get<std::size_t>();
      pk.rank = jp.at("rank").get<std::size_t>();
      pk.kernel = jp.at("kernel").get<std::vector<std::vector<std::uint64_t>>>();
      k.per_prime.push_back(std::move(pk));
    }
  k.reconstructed = j.value("reconstructed", false);
  if (k.reconstructed)
    for (const auto& e : j.at("kernel_vector")) k.integer_kernel.push_back(int_from_json(e));
  return k;
}

Json certificate_to_json(const Certificate& c) {
  Json j;
  j["target"] = c.target_name;
  j["r"] = c.r;
  j["d"] = c.d;
  j["shapes"] = Json::array({partition_to_json(c.pi), partition_to_json(c.mu),
                             partition_to_json(c.nu)});
  Json pairs = Json::array();
  for (const auto& p : c.basis) {
    Json jp;
    jp["tau1"] = perm_to_json(p.tau1);
    jp["tau2"] = perm_to_json(p.tau2);
    pairs.push_back(std::move(jp));
  }
  j["pairs"] = std::move(pairs);
  Json kv = Json::array();
  for (const auto& v : c.kernel_vector) kv.push_back(int_to_json(v));
  j["kernel"] = std::move(kv);
  j["primes"] = c.primes;
  Json evals;
  for (std::size_t i = 0; i < c.primes.size(); ++i)
    evals[std::to_string(c.primes[i])] = c.eval_at_target[i];
  j["eval_at_target"] = std::move(evals);
  j["sigma_r_checks"] = Json{{"points", c.sigma_checks}, {"all_zero", c.sigma_all_zero}};
  j["verdict"] = c.verdict;
  return j;
}

Json make_envelope(Json result, std::uint64_t seed, const std::vector<std::uint64_t>& primes,
                   std::int64_t wall_ms) {
  Json j;
  j["result"] = std::move(result);
  Json meta;
  meta["tool"] = "borderrank";
  meta["version"] = version_string;
  meta["seed"] = seed;
  meta["primes"] = primes;
  meta["wall_ms"] = wall_ms;
  j["meta"] = std::move(meta);
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << j.dump(2) << "\n";
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  Json j;
  in >> j;
  return j;
}

BasisFile basis_from_json(const Json& j) {
  BasisFile b;
  b.pi = partition_from_json(j.at("pi"));
  b.mu = partition_from_json(j.at("mu"));
  b.nu = partition_from_json(j.at("nu"));
  for (const auto& jp : j.at("pairs")) {
    HWVPoly p{b.pi, b.mu, b.nu, perm_from_json(jp.at("tau1")), perm_from_json(jp.at("tau2"))};
    p.check();
    b.polys.push_back(std::move(p));
  }
  return b;
}

Json basis_to_json(const BasisFile& b) {
  Json j;
  j["pi"] = partition_to_json(b.pi);
  j["mu"] = partition_to_json(b.mu);
  j["nu"] = partition_to_json(b.nu);
  Json pairs = Json::array();
  for (const auto& p : b.polys) {
    Json jp;
    jp["tau1"] = perm_to_json(p.tau1);
    jp["tau2"] = perm_to_json(p.tau2);
    pairs.push_back(std::move(jp));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

namespace {

Json cvec_to_json(const CVec& v) {
  Json j = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    j.push_back(Json::array({v[i].real(), v[i].imag()}));
  return j;
}

CVec cvec_from_json(const Json& j) {
  CVec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v[static_cast<Eigen::Index>(i)] = Cplx(j[i].at(0).get<double>(), j[i].at(1).get<double>());
  return v;
}

} // namespace

Json witness_to_json(const PseudoWitnessSet& pw) {
  Json j;
  j["variety"] = pw.map.name;
  j["source_dim"] = pw.map.source_dim;
  j["ambient_dim"] = pw.map.image_dim;
  j["cone"] = pw.map.cone;
  j["dim"] = pw.dim;
  j["fiber_dim"] = pw.fiber_dim;
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < pw.coeff.rows(); ++i) rows.push_back(cvec_to_json(pw.coeff.row(i)));
  j["slice"] = std::move(rows);
  Json pts = Json::array();
  for (const auto& p : pw.points) {
    Json jp;
    jp["source"] = cvec_to_json(p.source);
    jp["image"] = cvec_to_json(p.image);
    jp["residual"] = p.residual;
    pts.push_back(std::move(jp));
  }
  j["points"] = std::move(pts);
  j["seed"] = pw.seed;
  j["monodromy_rounds"] = pw.monodromy_rounds;
  j["path_failures"] = pw.path_failures;
  return j;
}

PseudoWitnessSet witness_from_json(const Json& j) {
  PseudoWitnessSet pw;
  pw.map = parse_variety_spec(j.at("variety").get<std::string>());
  pw.dim = j.at("dim").get<int>();
  pw.fiber_dim = j.at("fiber_dim").get<int>();
  const auto& rows = j.at("slice");
  pw.coeff = CMat(static_cast<Eigen::Index>(rows.size()),
                  pw.map.image_dim + pw.map.source_dim + 1);
  for (std::size_t i = 0; i < rows.size(); ++i)
    pw.coeff.row(static_cast<Eigen::Index>(i)) = cvec_from_json(rows[i]).transpose();
  for (const auto& jp : j.at("points")) {
    WitnessPoint p;
    p.source = cvec_from_json(jp.at("source"));
    p.image = cvec_from_json(jp.at("image"));
    p.residual = jp.at("residual").get<double>();
    pw.points.push_back(std::move(p));
  }
  pw.seed = j.value("seed", std::uint64_t{0});
  pw.monodromy_rounds = j.value("monodromy_rounds", 0);
  pw.path_failures = j.value("path_failures", 0);
  return pw;
}

} // namespace br
