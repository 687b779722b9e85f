#include "br/interpolate.hpp"

#include <cmath>
#include <stdexcept>

namespace br {

namespace {

void enumerate(int nvars, int degree, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
  const int pos = static_cast<int>(cur.size());
  if (pos == nvars - 1) {
    cur.push_back(degree); // absorb the remainder in the last variable
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur.push_back(e);
    enumerate(nvars, degree - e, cur, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<std::vector<int>> monomials_exact(int nvars, int degree) {
  if (nvars <= 0 || degree < 0) throw std::invalid_argument("monomials: bad arguments");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  enumerate(nvars, degree, cur, out);
  return out;
}

std::vector<std::vector<int>> monomials_upto(int nvars, int degree) {
  std::vector<std::vector<int>> out;
  for (int d = 0; d <= degree; ++d) {
    auto part = monomials_exact(nvars, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Cplx evaluate_poly(const std::vector<std::vector<int>>& monomials, const CVec& coeffs,
                   const CVec& point) {
  if (static_cast<std::size_t>(coeffs.size()) != monomials.size())
    throw std::invalid_argument("evaluate_poly: coefficient count mismatch");
  Cplx acc(0.0);
  for (std::size_t j = 0; j < monomials.size(); ++j) {
    Cplx m(1.0);
    for (std::size_t v = 0; v < monomials[j].size(); ++v)
      for (int e = 0; e < monomials[j][v]; ++e) m *= point[static_cast<Eigen::Index>(v)];
    acc += coeffs[static_cast<Eigen::Index>(j)] * m;
  }
  return acc;
}

Interpolation interpolate(const std::vector<CVec>& points, int degree,
                          const InterpolationOptions& opt) {
  if (points.empty()) throw std::invalid_argument("interpolate: no points");
  const int nvars = static_cast<int>(points.front().size());
  for (const auto& p : points)
    if (p.size() != nvars) throw std::invalid_argument("interpolate: ragged point dimensions");

  Interpolation out;
  out.monomials = opt.homogeneous ? monomials_exact(nvars, degree)
                                  : monomials_upto(nvars, degree);
  out.points = points.size();
  const std::size_t ncols = out.monomials.size();

  CMat m(points.size(), ncols);
  std::vector<std::vector<Cplx>> powers(nvars);
  for (std::size_t i = 0; i < points.size(); ++i) {
    CVec p = points[i];
    if (opt.homogeneous) {
      const double norm = p.norm();
      if (norm > 0) p /= norm;
    }
    for (int v = 0; v < nvars; ++v) {
      powers[v].assign(static_cast<std::size_t>(degree) + 1, Cplx(1.0));
      for (int e = 1; e <= degree; ++e) powers[v][e] = powers[v][e - 1] * p[v];
    }
    for (std::size_t j = 0; j < ncols; ++j) {
      Cplx val(1.0);
      for (int v = 0; v < nvars; ++v) val *= powers[v][out.monomials[j][v]];
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = val;
    }
    if (!opt.homogeneous) {
      const double rn = m.row(static_cast<Eigen::Index>(i)).norm();
      if (rn > 0) m.row(static_cast<Eigen::Index>(i)) /= rn;
    }
  }

  Eigen::VectorXd col_norms(ncols);
  for (std::size_t j = 0; j < ncols; ++j) {
    const double cn = m.col(static_cast<Eigen::Index>(j)).norm();
    col_norms[static_cast<Eigen::Index>(j)] = cn;
    if (cn > 0) m.col(static_cast<Eigen::Index>(j)) /= cn;
  }

  const SvdNullspace ns = svd_nullspace(m, opt.svd_tol);
  out.nullity = ns.nullity;
  out.singular_values = ns.singular_values;
  out.gap_ratio = ns.gap_ratio;
  out.reliable = ns.reliable;

  // Undo the column scaling (kernel of M diag(s) maps to kernel of M by
  // multiplying componentwise with s), then renormalize.
  out.basis = ns.basis;
  for (Eigen::Index j = 0; j < out.basis.cols(); ++j) {
    for (Eigen::Index i = 0; i < out.basis.rows(); ++i)
      if (col_norms[i] > 0) out.basis(i, j) /= col_norms[i];
    const double n2 = out.basis.col(j).norm();
    if (n2 > 0) out.basis.col(j) /= n2;
  }
  return out;
}

MinDegreeReport min_vanishing_degree(const std::function<CVec(Rng&)>& sampler, int d_max,
                                     Rng& rng, const MinDegreeOptions& opt) {
  if (!sampler) throw std::invalid_argument("min_vanishing_degree: no sampler");
  MinDegreeReport rep;
  for (int d = 1; d <= d_max; ++d) {
    const CVec probe = sampler(rng);
    const int nvars = static_cast<int>(probe.size());
    const std::size_t ncols = opt.interp.homogeneous ? monomials_exact(nvars, d).size()
                                                     : monomials_upto(nvars, d).size();
    const std::size_t npts =
        static_cast<std::size_t>(std::ceil(opt.oversample * static_cast<double>(ncols)));
    if (npts * ncols > opt.max_matrix_entries) {
      rep.budget_exceeded = true;
      break;
    }
    std::vector<CVec> pts;
    pts.reserve(npts);
    pts.push_back(probe);
    while (pts.size() < npts) pts.push_back(sampler(rng));

    rep.per_degree.push_back(interpolate(pts, d, opt.interp));
    rep.last_completed = d;
    const Interpolation& it = rep.per_degree.back();
    if (it.nullity > 0 && it.reliable) {
      rep.found = true;
      rep.degree = d;
      break;
    }
  }
  return rep;
}

std::vector<CVec> hyperplane_coordinates(const std::vector<CVec>& points, const CVec& form) {
  const Eigen::Index n = form.size();
  // Orthonormal kernel basis of the single linear form.
  CMat row(1, n);
  row.row(0) = form.transpose();
  Eigen::JacobiSVD<CMat> svd(row, Eigen::ComputeFullV);
  const CMat basis = svd.matrixV().rightCols(n - 1); // n x (n-1), orthonormal

  std::vector<CVec> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    if (p.size() != n) throw std::invalid_argument("hyperplane_coordinates: dimension mismatch");
    const CVec z = basis.adjoint() * p; // least squares for orthonormal columns
    const double res = (basis * z - p).norm();
    if (res > 1e-8 * std::max(1.0, p.norm()))
      throw std::invalid_argument("hyperplane_coordinates: point is not on the hyperplane");
    out.push_back(z);
  }
  return out;
}

} // namespace br
