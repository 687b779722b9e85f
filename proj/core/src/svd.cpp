#include "br/svd.hpp"

#include <limits>

namespace br {

SvdNullspace svd_nullspace(const CMat& m, double tol) {
  SvdNullspace out;
  const std::size_t n = static_cast<std::size_t>(m.cols());
  if (m.rows() == 0 || n == 0) {
    out.nullity = n;
    out.basis = CMat::Identity(n, n);
    out.gap_ratio = std::numeric_limits<double>::infinity();
    return out;
  }

  Eigen::BDCSVD<CMat> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  out.singular_values.assign(sv.data(), sv.data() + sv.size());

  const double smax = out.singular_values.empty() ? 0.0 : out.singular_values.front();
  if (smax == 0.0) {
    out.nullity = n;
    out.basis = CMat::Identity(n, n);
    out.gap_ratio = std::numeric_limits<double>::infinity();
    return out;
  }

  const double cut = tol * smax;
  std::size_t kept = 0;
  while (kept < out.singular_values.size() && out.singular_values[kept] >= cut) ++kept;

  out.nullity = n - kept;
  out.basis = svd.matrixV().rightCols(static_cast<Eigen::Index>(out.nullity));

  const std::size_t nsv = out.singular_values.size();
  if (kept == 0) {
    out.gap_ratio = std::numeric_limits<double>::infinity();
  } else if (kept == nsv) {
    // nothing cut by the svd itself; nullity may still be positive when the
    // matrix is wider than tall (structural nullspace)
    out.gap_ratio = out.singular_values[nsv - 1] / cut;
  } else {
    const double below = out.singular_values[kept];
    out.gap_ratio = below == 0.0 ? std::numeric_limits<double>::infinity()
                                 : out.singular_values[kept - 1] / below;
  }
  out.reliable = out.gap_ratio >= 10.0;
  return out;
}

std::size_t svd_rank(const CMat& m, double tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::BDCSVD<CMat> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cut = tol * sv(0);
  std::size_t kept = 0;
  while (kept < static_cast<std::size_t>(sv.size()) && sv(kept) >= cut) ++kept;
  return kept;
}

CRowReduce complex_row_reduce(const CMat& m, double tol) {
  CRowReduce res;
  res.rref = m;
  CMat& A = res.rref;
  const Eigen::Index rows = A.rows(), cols = A.cols();
  const double scale = A.size() == 0 ? 0.0 : A.cwiseAbs().maxCoeff();
  const double eps = tol * (scale == 0.0 ? 1.0 : scale);

  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pr = row;
    double best = 0.0;
    for (Eigen::Index r = row; r < rows; ++r) {
      double v = std::abs(A(r, col));
      if (v > best) { best = v; pr = r; }
    }
    if (best <= eps) {
      for (Eigen::Index r = row; r < rows; ++r) A(r, col) = 0.0;
      continue;
    }
    A.row(row).swap(A.row(pr));
    A.row(row) /= A(row, col);
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == row) continue;
      const std::complex<double> f = A(r, col);
      if (std::abs(f) == 0.0) continue;
      A.row(r) -= f * A.row(row);
    }
    res.pivots.push_back(static_cast<std::size_t>(col));
    ++row;
  }
  res.rank = static_cast<std::size_t>(row);
  return res;
}

} // namespace br
