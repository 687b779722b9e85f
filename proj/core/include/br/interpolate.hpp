#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "br/parametrization.hpp"

namespace br {

// Exponent vectors of total degree exactly d (resp. at most d) in nvars
// variables, in lexicographic order.
std::vector<std::vector<int>> monomials_exact(int nvars, int degree);
std::vector<std::vector<int>> monomials_upto(int nvars, int degree);

struct InterpolationOptions {
  double svd_tol = 1e-8;
  // Homogeneous mode interpolates forms of degree exactly d and is the right
  // choice for cones; sample points are scaled to unit norm first (a uniform
  // row scaling for homogeneous monomials).  Affine mode uses all monomials
  // of degree at most d and must not rescale points, so rows are normalized
  // instead (also kernel-preserving).  Both modes scale monomial columns to
  // unit norm before the SVD and unscale the kernel afterwards.
  bool homogeneous = true;
};

struct Interpolation {
  std::size_t nullity = 0;
  std::vector<std::vector<int>> monomials;
  CMat basis; // monomials.size() x nullity, coefficient vectors, unit norm
  std::vector<double> singular_values;
  double gap_ratio = 0.0;
  bool reliable = true;
  std::size_t points = 0;
};

// Dimension and a basis of the space of polynomials of the given degree
// vanishing on the sample points, via the SVD nullspace of the preconditioned
// sample-by-monomial matrix.
Interpolation interpolate(const std::vector<CVec>& points, int degree,
                          const InterpolationOptions& opt = {});

// Evaluate a coefficient vector from `interpolate` at a point.
Cplx evaluate_poly(const std::vector<std::vector<int>>& monomials, const CVec& coeffs,
                   const CVec& point);

struct MinDegreeOptions {
  InterpolationOptions interp;
  double oversample = 1.5;                      // points per monomial
  std::size_t max_matrix_entries = 40'000'000;  // memory budget
};

struct MinDegreeReport {
  bool found = false;
  int degree = -1;         // first degree with a reliable positive nullity
  int last_completed = 0;  // highest degree actually examined
  bool budget_exceeded = false;
  std::vector<Interpolation> per_degree;
};

// Iterate interpolate over d = 1..d_max with oversampled point sets drawn
// from `sampler`; stops early when the memory budget would be exceeded.
MinDegreeReport min_vanishing_degree(const std::function<CVec(Rng&)>& sampler, int d_max,
                                     Rng& rng, const MinDegreeOptions& opt = {});

// Intrinsic coordinates for points lying on the hyperplane {form . x = 0}:
// least-squares coefficients with respect to an orthonormal kernel basis of
// the form.  Residuals beyond 1e-8 of the point norm throw (the points do not
// lie on the hyperplane).
std::vector<CVec> hyperplane_coordinates(const std::vector<CVec>& points, const CVec& form);

} // namespace br
