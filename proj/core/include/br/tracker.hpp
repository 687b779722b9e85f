#pragma once

#include <string>

#include "br/parametrization.hpp"

namespace br {

// Square polynomial system built by composing affine-linear forms with a
// parametrization:
//
//   F(y) = coeff * [g(y); y; 1],   coeff: m x (n + m + 1),  m = source_dim.
//
// The first `image_rows` rows are forms in the image coordinates (the linear
// slice); the remaining rows act on the source variables (gauge forms that
// cut positive-dimensional fibers down to points).  A row (a | h | c)
// represents the equation a.g(y) + h.y + c = 0.
struct SlicedSystem {
  const Parametrization* map = nullptr;
  CMat coeff;
  int image_rows = 0;

  CVec augmented(const CVec& y) const; // [g(y); y; 1]
  CVec residual(const CVec& y) const;  // F(y)
  CMat jacobian(const CVec& y) const;  // m x m

  void check() const;
};

struct TrackerConfig {
  int predictor_order = 4;   // 1 = Euler, 4 = classical Runge-Kutta
  double initial_step = 0.1;
  double min_step = 1e-7;
  double max_step = 0.25;
  double newton_tol = 1e-10;
  int max_corrector_iters = 3;
  Cplx gamma{1.0, 0.0};      // deformation factor on the start system
  int max_steps = 20000;
  double divergence_bound = 1e8;

  void validate() const;
};

enum class TrackStatus {
  Success,
  StepUnderflow, // adaptive step fell below min_step away from the endpoint
  NearSingular,  // step underflow with t < 1e-12: endpoint is likely singular
  Divergence,    // iterate escaped past divergence_bound
  MaxSteps,
};

std::string to_string(TrackStatus s);

struct TrackResult {
  TrackStatus status = TrackStatus::MaxSteps;
  CVec y;                // endpoint in source coordinates (last accepted point)
  double residual = 0.0; // ||F_end(y)||_inf at the endpoint
  double t_reached = 1.0;
  int steps = 0;
  int rejections = 0;

  bool ok() const { return status == TrackStatus::Success; }
};

// Predictor-corrector continuation along the convex deformation
//
//   C(t) = t * gamma * from.coeff + (1 - t) * to.coeff,   t: 1 -> 0,
//
// for two systems over the same parametrization.  Scaling the start system by
// a random unit gamma leaves its zero set unchanged while moving the path off
// the real discriminant.  `start` must satisfy `from` within Newton tolerance
// (it is polished first; a bad start throws).  A successful track ends at a
// point of `to` with residual below newton_tol.
TrackResult track(const SlicedSystem& from, const SlicedSystem& to, const CVec& start,
                  const TrackerConfig& cfg);

// Newton iteration on a fixed system; returns the infinity-norm residual.
double newton_polish(const SlicedSystem& sys, CVec& y, double tol, int max_iters);

} // namespace br
