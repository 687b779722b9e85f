#include "br/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace br {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::No: return "no";
    case Outcome::Yes: return "yes";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

double image_distance(const CVec& x, const CVec& y, bool cone) {
  if (cone) {
    // sin of the principal angle between the lines C.x and C.y: equivalent to
    // comparing projective normalizations but immune to ties in the choice of
    // the normalizing coordinate.
    const double nx = x.norm(), ny = y.norm();
    if (nx == 0.0 || ny == 0.0) return nx == ny ? 0.0 : 1.0;
    const double c = std::abs(x.dot(y)) / (nx * ny); // Eigen dot is Hermitian

    return std::sqrt(std::max(0.0, 1.0 - std::min(1.0, c) * std::min(1.0, c)));
  }
  const double scale = std::max({1.0, x.norm(), y.norm()});
  return (x - y).norm() / scale;
}

CMat random_slice(const Parametrization& g, int dim, Rng& rng) {
  const int n = g.image_dim, m = g.source_dim;
  CMat c = CMat::Zero(m, n + m + 1);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < n; ++j) c(i, j) = random_complex(rng);
    c(i, n + m) = random_complex(rng);
  }
  for (int i = dim; i < m; ++i) {
    for (int j = 0; j < m; ++j) c(i, n + j) = random_complex(rng);
    c(i, n + m) = random_complex(rng);
  }
  return c;
}

TrackResult tracked_with_retries(const SlicedSystem& from, const SlicedSystem& to,
                                 const CVec& start, const WitnessOptions& opt, Rng& rng) {
  TrackResult last;
  for (int attempt = 0; attempt <= opt.gamma_retries; ++attempt) {
    TrackerConfig cfg = opt.tracker;
    cfg.gamma = random_unit_complex(rng);
    last = track(from, to, start, cfg);
    if (last.ok()) return last;
  }
  return last;
}

namespace {

bool known_image(const PseudoWitnessSet& pw, const CVec& image, double tol) {
  for (const auto& p : pw.points)
    if (image_distance(p.image, image, pw.map.cone) < tol) return true;
  return false;
}

} // namespace

PseudoWitnessSet pseudo_witness(const Parametrization& g, Rng& rng, const WitnessOptions& opt) {
  g.check();
  const DimensionInfo di = image_dimension(g, rng);
  if (di.degenerate)
    throw std::runtime_error("pseudo_witness: " + g.name +
                             ": Jacobian rank differs between random points (degenerate)");

  PseudoWitnessSet pw;
  pw.map = g;
  pw.dim = di.dim;
  pw.fiber_dim = di.fiber_dim;
  pw.coeff = random_slice(pw.map, pw.dim, rng);

  const CVec y0 = random_source_point(pw.map, rng);
  const SlicedSystem target = pw.system();
  // Start system: the same forms with constants shifted so every row vanishes
  // at y0 (the homotopy L(x) - t L(x0) in coefficient form).
  CMat start_coeff = pw.coeff;
  start_coeff.col(start_coeff.cols() - 1) -= target.residual(y0);
  const SlicedSystem from{&pw.map, start_coeff, pw.dim};

  const TrackResult tr = tracked_with_retries(from, target, y0, opt, rng);
  if (!tr.ok())
    throw std::runtime_error("pseudo_witness: start path failed (" + to_string(tr.status) + ")");
  pw.points.push_back(WitnessPoint{tr.y, pw.map.eval(tr.y), tr.residual});
  return pw;
}

MonodromyReport monodromy_expand(PseudoWitnessSet& pw, int max_rounds, Rng& rng,
                                 const WitnessOptions& opt) {
  if (pw.points.empty()) throw std::invalid_argument("monodromy_expand: empty witness set");
  MonodromyReport rep;
  int quiet = 0;
  for (int round = 0; round < max_rounds; ++round) {
    ++rep.rounds;
    ++pw.monodromy_rounds;
    const SlicedSystem s0 = pw.system();
    const SlicedSystem s1{&pw.map, random_slice(pw.map, pw.dim, rng), pw.dim};
    const SlicedSystem s2{&pw.map, random_slice(pw.map, pw.dim, rng), pw.dim};

    const std::size_t before = pw.points.size();
    const std::vector<WitnessPoint> snapshot = pw.points;
    for (const auto& wp : snapshot) {
      TrackResult leg = tracked_with_retries(s0, s1, wp.source, opt, rng);
      if (leg.ok()) leg = tracked_with_retries(s1, s2, leg.y, opt, rng);
      if (leg.ok()) leg = tracked_with_retries(s2, s0, leg.y, opt, rng);
      if (!leg.ok()) {
        ++rep.failures;
        ++pw.path_failures;
        continue;
      }
      const CVec image = pw.map.eval(leg.y);
      if (!known_image(pw, image, opt.image_tol)) {
        pw.points.push_back(WitnessPoint{leg.y, image, leg.residual});
        ++rep.new_points;
      }
    }
    quiet = pw.points.size() == before ? quiet + 1 : 0;
    if (quiet >= opt.stable_rounds) {
      rep.stabilized = true;
      break;
    }
  }
  return rep;
}

namespace {

// Track every witness point onto the system with coefficients `target_coeff`
// and return the distinct endpoint images.  When the parametrization has
// several source points per image (finite fiber symmetry), two paths can end
// in different fibers over the same image and the distinct count drops; the
// endpoint set is then itself a witness point set of the target slice, so it
// is completed by monodromy loops based at that slice until the count matches
// the witness count or the retry budget runs out.
struct MovedPoints {
  std::vector<CVec> images;  // pairwise-distinct endpoint images
  std::vector<CVec> sources; // matching source representatives
  int failures = 0;          // paths that never reached the target system
  int missing = 0;           // images short of the witness count after repair
};

MovedPoints move_points(const PseudoWitnessSet& pw, const CMat& target_coeff,
                        const WitnessOptions& opt, Rng& rng) {
  const SlicedSystem s0 = pw.system();
  const SlicedSystem s1{&pw.map, target_coeff, pw.dim};
  const std::size_t k = pw.points.size();

  MovedPoints out;
  auto add = [&](const CVec& y) {
    const CVec img = pw.map.eval(y);
    for (const auto& known : out.images)
      if (image_distance(known, img, pw.map.cone) < opt.image_tol) return;
    out.images.push_back(img);
    out.sources.push_back(y);
  };

  for (const auto& wp : pw.points) {
    const TrackResult tr = tracked_with_retries(s0, s1, wp.source, opt, rng);
    if (tr.ok())
      add(tr.y);
    else
      ++out.failures;
  }

  for (int round = 0; round < opt.collision_retries && out.images.size() < k; ++round) {
    const SlicedSystem a1{&pw.map, random_slice(pw.map, pw.dim, rng), pw.dim};
    const SlicedSystem a2{&pw.map, random_slice(pw.map, pw.dim, rng), pw.dim};
    const std::vector<CVec> snapshot = out.sources;
    for (const auto& y : snapshot) {
      TrackResult leg = tracked_with_retries(s1, a1, y, opt, rng);
      if (leg.ok()) leg = tracked_with_retries(a1, a2, leg.y, opt, rng);
      if (leg.ok()) leg = tracked_with_retries(a2, s1, leg.y, opt, rng);
      if (leg.ok()) add(leg.y);
    }
  }
  out.missing = static_cast<int>(k) - static_cast<int>(out.images.size());
  return out;
}

CVec centroid(const std::vector<CVec>& pts) {
  CVec c = CVec::Zero(pts.front().size());
  for (const auto& p : pts) c += p;
  return c / static_cast<double>(pts.size());
}

} // namespace

TraceResult trace_test(const PseudoWitnessSet& pw, Rng& rng, const WitnessOptions& opt) {
  if (pw.points.empty()) throw std::invalid_argument("trace_test: empty witness set");
  TraceResult res;

  const Cplx delta = random_unit_complex(rng);
  const Eigen::Index last = pw.coeff.cols() - 1;
  CMat plus = pw.coeff, minus = pw.coeff;
  plus(0, last) += delta;
  minus(0, last) -= delta;

  const MovedPoints mp = move_points(pw, plus, opt, rng);
  const MovedPoints mm = move_points(pw, minus, opt, rng);
  res.failures = mp.failures + mm.failures;
  // Without one endpoint image per witness point the centroids are not
  // comparable; report inconclusive rather than a verdict.
  if (mp.missing > 0 || mm.missing > 0) return res;

  std::vector<CVec> base;
  base.reserve(pw.points.size());
  for (const auto& wp : pw.points) base.push_back(wp.image);

  const CVec c0 = centroid(base), cp = centroid(mp.images), cm = centroid(mm.images);
  res.residual = (cp + cm - 2.0 * c0).norm();
  res.scale = (cp - cm).norm();
  res.outcome = res.residual < opt.trace_tol * res.scale ? Outcome::Yes : Outcome::No;
  return res;
}

MembershipResult membership(const PseudoWitnessSet& pw, const CVec& target, Rng& rng,
                            const WitnessOptions& opt) {
  if (pw.points.empty()) throw std::invalid_argument("membership: empty witness set");
  if (target.size() != pw.map.image_dim)
    throw std::invalid_argument("membership: target has the wrong ambient dimension");

  // General slice through the target: random image forms with constants
  // chosen so each vanishes at the target; fresh random gauges.
  const int n = pw.map.image_dim, m = pw.map.source_dim;
  CMat c = random_slice(pw.map, pw.dim, rng);
  for (int i = 0; i < pw.dim; ++i) {
    Cplx dot(0.0);
    for (int j = 0; j < n; ++j) dot += c(i, j) * target[j];
    c(i, n + m) = -dot;
  }

  const MovedPoints mp = move_points(pw, c, opt, rng);
  MembershipResult res;
  res.failures = mp.failures;
  res.best_distance = std::numeric_limits<double>::infinity();
  for (const auto& img : mp.images)
    res.best_distance = std::min(res.best_distance, image_distance(img, target, pw.map.cone));
  if (res.best_distance < opt.image_tol)
    res.outcome = Outcome::Yes;
  else if (mp.missing == 0)
    // All slice points accounted for and none coincides with the target.
    res.outcome = Outcome::No;
  return res;
}

SliceSample slice_with_form(const PseudoWitnessSet& pw, const CVec& form, Cplx constant,
                            Rng& rng, const WitnessOptions& opt) {
  if (pw.points.empty()) throw std::invalid_argument("slice_with_form: empty witness set");
  const int n = pw.map.image_dim, m = pw.map.source_dim;
  if (form.size() != n)
    throw std::invalid_argument("slice_with_form: form has the wrong ambient dimension");

  CMat c = random_slice(pw.map, pw.dim, rng);
  for (int j = 0; j < n; ++j) c(0, j) = form[j];
  c(0, n + m) = -constant;

  const MovedPoints mp = move_points(pw, c, opt, rng);
  SliceSample out;
  out.failures = mp.failures + mp.missing;
  out.images = mp.images;
  out.sources = mp.sources;
  return out;
}

} // namespace br
