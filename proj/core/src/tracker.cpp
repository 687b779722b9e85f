#include "br/tracker.hpp"

#include <stdexcept>

namespace br {

CVec SlicedSystem::augmented(const CVec& y) const {
  const int n = map->image_dim, m = map->source_dim;
  CVec v(n + m + 1);
  v.head(n) = map->eval(y);
  v.segment(n, m) = y;
  v[n + m] = Cplx(1.0);
  return v;
}

CVec SlicedSystem::residual(const CVec& y) const { return coeff * augmented(y); }

CMat SlicedSystem::jacobian(const CVec& y) const {
  const int n = map->image_dim, m = map->source_dim;
  return coeff.leftCols(n) * map->jacobian(y) + coeff.middleCols(n, m);
}

void SlicedSystem::check() const {
  if (map == nullptr) throw std::invalid_argument("sliced system: no parametrization");
  map->check();
  const int n = map->image_dim, m = map->source_dim;
  if (coeff.rows() != m || coeff.cols() != n + m + 1)
    throw std::invalid_argument("sliced system: coefficient matrix must be m x (n+m+1)");
  if (image_rows < 0 || image_rows > m)
    throw std::invalid_argument("sliced system: image_rows out of range");
}

void TrackerConfig::validate() const {
  if (newton_tol <= 0 || initial_step <= 0 || min_step <= 0 || max_step <= 0)
    throw std::invalid_argument("tracker config: tolerances and steps must be positive");
  if (min_step >= max_step)
    throw std::invalid_argument("tracker config: min step must be below max step");
  if (predictor_order != 1 && predictor_order != 4)
    throw std::invalid_argument("tracker config: predictor order must be 1 or 4");
  if (max_corrector_iters <= 0 || max_steps <= 0)
    throw std::invalid_argument("tracker config: iteration budgets must be positive");
}

std::string to_string(TrackStatus s) {
  switch (s) {
    case TrackStatus::Success: return "success";
    case TrackStatus::StepUnderflow: return "step-underflow";
    case TrackStatus::NearSingular: return "near-singular";
    case TrackStatus::Divergence: return "divergence";
    case TrackStatus::MaxSteps: return "max-steps";
  }
  return "unknown";
}

namespace {

// Homotopy state: C(t) = t * gamma * A + (1 - t) * B over a shared map.
struct Homotopy {
  const SlicedSystem* from;
  const SlicedSystem* to;
  Cplx gamma;

  CMat coeff(double t) const { return (gamma * t) * from->coeff + (1.0 - t) * to->coeff; }
  CMat dcoeff() const { return gamma * from->coeff - to->coeff; }

  SlicedSystem at(double t) const { return SlicedSystem{from->map, coeff(t), from->image_rows}; }
};

// dy/dt from the Davidenko equation J(y,t) y' = -C'(t) [g(y); y; 1].
// Returns false when the linear solve is unusable (singular Jacobian).
bool derivative(const Homotopy& h, const CMat& dc, double t, const CVec& y, CVec& out) {
  const SlicedSystem sys = h.at(t);
  const CMat jac = sys.jacobian(y);
  Eigen::PartialPivLU<CMat> lu(jac);
  out = lu.solve(-(dc * sys.augmented(y)));
  return out.allFinite();
}

// Newton corrector at fixed t.  True when the last update is small.
bool correct(const SlicedSystem& sys, CVec& y, const TrackerConfig& cfg) {
  for (int it = 0; it < cfg.max_corrector_iters; ++it) {
    const CMat jac = sys.jacobian(y);
    Eigen::PartialPivLU<CMat> lu(jac);
    const CVec delta = lu.solve(-sys.residual(y));
    if (!delta.allFinite()) return false;
    y += delta;
    const double scale = std::max(1.0, y.cwiseAbs().maxCoeff());
    if (delta.cwiseAbs().maxCoeff() < cfg.newton_tol * scale) return true;
  }
  return false;
}

} // namespace

double newton_polish(const SlicedSystem& sys, CVec& y, double tol, int max_iters) {
  for (int it = 0; it < max_iters; ++it) {
    const CVec f = sys.residual(y);
    if (f.cwiseAbs().maxCoeff() < tol) break;
    Eigen::PartialPivLU<CMat> lu(sys.jacobian(y));
    const CVec delta = lu.solve(-f);
    if (!delta.allFinite()) break;
    y += delta;
  }
  return sys.residual(y).cwiseAbs().maxCoeff();
}

TrackResult track(const SlicedSystem& from, const SlicedSystem& to, const CVec& start,
                  const TrackerConfig& cfg) {
  cfg.validate();
  from.check();
  to.check();
  if (from.map != to.map || from.coeff.rows() != to.coeff.rows())
    throw std::invalid_argument("track: start and target systems must share the parametrization");
  if (start.size() != from.map->source_dim)
    throw std::invalid_argument("track: start point has the wrong dimension");

  TrackResult res;
  res.y = start;
  // The start system scaled by gamma has the same zeros, so polishing against
  // `from` is enough to validate the start point.
  if (newton_polish(from, res.y, cfg.newton_tol, cfg.max_corrector_iters + 2) >
      1e3 * cfg.newton_tol)
    throw std::invalid_argument("track: start point does not satisfy the start system");

  const Homotopy h{&from, &to, cfg.gamma};
  const CMat dc = h.dcoeff();

  double t = 1.0;
  double step = std::min(cfg.initial_step, cfg.max_step);
  CVec y = res.y;

  while (t > 0.0) {
    if (res.steps + res.rejections >= cfg.max_steps) {
      res.status = TrackStatus::MaxSteps;
      res.t_reached = t;
      return res;
    }
    const double hstep = std::min(step, t);
    const double tn = t - hstep;

    // Predict.
    CVec yp = y;
    bool pred_ok = true;
    if (cfg.predictor_order == 1) {
      CVec k1;
      pred_ok = derivative(h, dc, t, y, k1);
      if (pred_ok) yp = y - hstep * k1;
    } else {
      CVec k1, k2, k3, k4;
      const double dt = -hstep;
      pred_ok = derivative(h, dc, t, y, k1) &&
                derivative(h, dc, t + dt / 2, y + (dt / 2) * k1, k2) &&
                derivative(h, dc, t + dt / 2, y + (dt / 2) * k2, k3) &&
                derivative(h, dc, t + dt, y + dt * k3, k4);
      if (pred_ok) yp = y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }

    // Correct.
    bool ok = pred_ok && yp.allFinite();
    if (ok) ok = correct(h.at(tn), yp, cfg);
    if (ok && yp.cwiseAbs().maxCoeff() > cfg.divergence_bound) {
      res.status = TrackStatus::Divergence;
      res.y = y;
      res.t_reached = t;
      return res;
    }

    if (ok) {
      y = yp;
      t = tn;
      ++res.steps;
      step = std::min(step * 2.0, cfg.max_step);
    } else {
      ++res.rejections;
      step *= 0.5;
      if (step < cfg.min_step) {
        res.status = t < 1e-12 ? TrackStatus::NearSingular : TrackStatus::StepUnderflow;
        res.y = y;
        res.t_reached = t;
        return res;
      }
    }
  }

  // Endpoint polish against the exact target system.
  res.residual = newton_polish(to, y, cfg.newton_tol, cfg.max_corrector_iters + 2);
  res.y = y;
  res.t_reached = 0.0;
  if (!y.allFinite() || y.cwiseAbs().maxCoeff() > cfg.divergence_bound) {
    res.status = TrackStatus::Divergence;
  } else if (res.residual < cfg.newton_tol) {
    res.status = TrackStatus::Success;
  } else {
    res.status = TrackStatus::NearSingular;
  }
  return res;
}

} // namespace br
