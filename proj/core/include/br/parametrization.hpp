#pragma once

#include <complex>
#include <functional>
#include <string>

#include "br/rng.hpp"
#include "br/svd.hpp"

namespace br {

using Cplx = std::complex<double>;

// A polynomial (or rational) map g : C^m -> C^n whose image closure is the
// variety under study.  `cone` marks homogeneous maps: the image is closed
// under scaling and deduplication / membership comparisons are projective.
// For rational maps (the circle chart) the parameter domain excludes the
// poles; random complex parameters avoid them with probability one.
struct Parametrization {
  std::string name;
  int source_dim = 0; // m
  int image_dim = 0;  // n (ambient)
  bool cone = false;
  std::function<CVec(const CVec&)> eval;
  std::function<CMat(const CVec&)> jacobian; // n x m

  void check() const;
};

// (s,t) -> (s^3, s^2 t, s t^2, t^3), cone over a degree-3 rational normal curve.
Parametrization twisted_cubic();
// (s,t) -> (s^4, s^3 t, s t^3, t^4), cone over a degree-4 (non-ACM) curve.
Parametrization x2_quartic();
// t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)), the unit circle in affine coordinates.
Parametrization circle();
// r blocks of (u_i, v_i, w_i) -> sum_i u_i (x) v_i (x) w_i, the cone over the
// r-th secant variety of the Segre variety in C^a (x) C^b (x) C^c.
// Entry layout matches Tensor3: index (i*b + j)*c + k.
Parametrization segre_sigma(int r, int a, int b, int c);

// Lookup by spec string: "twisted-cubic", "x2-quartic", "circle", or
// "sigma:<r>:<a>,<b>,<c>".  Throws std::invalid_argument on anything else.
Parametrization parse_variety_spec(const std::string& spec);

// Source point with iid standard complex gaussian entries.
CVec random_source_point(const Parametrization& g, Rng& rng);

Cplx random_complex(Rng& rng);          // standard complex gaussian
Cplx random_unit_complex(Rng& rng);     // uniform on the unit circle

struct DimensionInfo {
  int dim = 0;       // rank of the Jacobian at a random source point:
                     // dimension of the image (of the affine cone when `cone`)
  int fiber_dim = 0; // source_dim - dim
  bool degenerate = false; // Jacobian rank disagreed across 3 random points
};

// Image dimension by numerical rank of the Jacobian, sampled at 3 random
// points; disagreement flags the parametrization degenerate.
DimensionInfo image_dimension(const Parametrization& g, Rng& rng, double tol = 1e-8);

} // namespace br
