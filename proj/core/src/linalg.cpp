#include "br/linalg.hpp"

namespace br {

FpRowReduce row_reduce(const FpMatrix& m) {
  m.validate();
  const PrimeField& F = m.field;
  FpRowReduce res{0, {}, m, {}};
  FpMatrix& A = res.rref;

  std::size_t row = 0;
  for (std::size_t col = 0; col < A.cols && row < A.rows; ++col) {
    // first nonzero entry in this column at or below `row`
    std::size_t pr = row;
    while (pr < A.rows && A.at(pr, col) == 0) ++pr;
    if (pr == A.rows) continue;
    if (pr != row)
      for (std::size_t c = 0; c < A.cols; ++c) std::swap(A.at(row, c), A.at(pr, c));

    const std::uint64_t pivinv = F.inv(A.at(row, col));
    for (std::size_t c = col; c < A.cols; ++c) A.at(row, c) = F.mul(A.at(row, c), pivinv);
    for (std::size_t r = 0; r < A.rows; ++r) {
      if (r == row) continue;
      const std::uint64_t f = A.at(r, col);
      if (f == 0) continue;
      for (std::size_t c = col; c < A.cols; ++c)
        A.at(r, c) = F.sub(A.at(r, c), F.mul(f, A.at(row, c)));
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.rank = row;

  // kernel basis from the free columns
  std::vector<char> is_pivot(A.cols, 0);
  for (std::size_t c : res.pivots) is_pivot[c] = 1;
  for (std::size_t f = 0; f < A.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint64_t> v(A.cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < res.pivots.size(); ++i)
      v[res.pivots[i]] = F.neg(A.at(i, f));
    res.kernel.push_back(std::move(v));
  }
  return res;
}

RatRowReduce row_reduce(const std::vector<std::vector<Rat>>& m, std::size_t cols) {
  RatRowReduce res;
  res.rref = m;
  auto& A = res.rref;
  const std::size_t rows = A.size();
  for (const auto& r : A)
    if (r.size() != cols) throw std::invalid_argument("row_reduce: ragged matrix");

  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pr = row;
    while (pr < rows && A[pr][col] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(A[row], A[pr]);
    const Rat piv = A[row][col];
    for (std::size_t c = col; c < cols; ++c) A[row][c] /= piv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || A[r][col] == 0) continue;
      const Rat f = A[r][col];
      for (std::size_t c = col; c < cols; ++c) A[r][c] -= f * A[row][c];
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.rank = row;

  std::vector<char> is_pivot(cols, 0);
  for (std::size_t c : res.pivots) is_pivot[c] = 1;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < res.pivots.size(); ++i) v[res.pivots[i]] = -A[i][f];
    res.kernel.push_back(std::move(v));
  }
  return res;
}

std::uint64_t fp_determinant(const FpMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("fp_determinant: not square");
  const PrimeField& F = m.field;
  FpMatrix A = m;
  std::uint64_t det = 1;
  for (std::size_t col = 0; col < A.cols; ++col) {
    std::size_t pr = col;
    while (pr < A.rows && A.at(pr, col) == 0) ++pr;
    if (pr == A.rows) return 0;
    if (pr != col) {
      for (std::size_t c = 0; c < A.cols; ++c) std::swap(A.at(col, c), A.at(pr, c));
      det = F.neg(det);
    }
    const std::uint64_t piv = A.at(col, col);
    det = F.mul(det, piv);
    const std::uint64_t pivinv = F.inv(piv);
    for (std::size_t r = col + 1; r < A.rows; ++r) {
      const std::uint64_t f = F.mul(A.at(r, col), pivinv);
      if (f == 0) continue;
      for (std::size_t c = col; c < A.cols; ++c)
        A.at(r, c) = F.sub(A.at(r, c), F.mul(f, A.at(col, c)));
    }
  }
  return det;
}

Rat rat_determinant(std::vector<std::vector<Rat>> A) {
  const std::size_t n = A.size();
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pr = col;
    while (pr < n && A[pr][col] == 0) ++pr;
    if (pr == n) return 0;
    if (pr != col) {
      std::swap(A[col], A[pr]);
      det = -det;
    }
    det *= A[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (A[r][col] == 0) continue;
      const Rat f = A[r][col] / A[col][col];
      for (std::size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
    }
  }
  return det;
}

} // namespace br
