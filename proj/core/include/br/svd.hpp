#pragma once

#include <Eigen/Dense>
#include <vector>

namespace br {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

// Numerical nullspace via SVD.  A singular value is "zero" when it is below
// tol * sigma_max.  gap_ratio measures how decisive the cut is:
//   - 0 < nullity < #values: smallest kept / largest cut singular value,
//   - nullity == 0: sigma_min / (tol * sigma_max), i.e. margin above the cut,
//   - everything cut (or zero matrix): infinity.
// A ratio below 10 flags the nullity as unreliable (reported, not thrown).
struct SvdNullspace {
  std::size_t nullity = 0;
  CMat basis; // cols() == nullity, orthonormal
  std::vector<double> singular_values;
  double gap_ratio = 0.0;
  bool reliable = true;
};

SvdNullspace svd_nullspace(const CMat& m, double tol = 1e-8);

// Rank with the same threshold convention.
std::size_t svd_rank(const CMat& m, double tol = 1e-8);

// Thresholded Gaussian elimination over the complex numbers.  Pivot is the
// entry of largest modulus in the current column; entries below
// tol * (largest modulus in the matrix) count as zero.  Exact-field inputs
// should use row_reduce instead.
struct CRowReduce {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  CMat rref;
};

CRowReduce complex_row_reduce(const CMat& m, double tol = 1e-10);

} // namespace br
