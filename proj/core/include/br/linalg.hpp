#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "br/bigint.hpp"
#include "br/fp.hpp"

namespace br {

// Dense matrix over a prime field.  Entries are validated to lie in [0, p);
// operations combining two matrices reject mismatched moduli.
struct FpMatrix {
  PrimeField field;
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint64_t> a; // row-major

  FpMatrix(PrimeField f, std::size_t r, std::size_t c)
      : field(f), rows(r), cols(c), a(r * c, 0) {}

  std::uint64_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  void validate() const {
    for (std::uint64_t x : a)
      if (x >= field.modulus())
        throw std::invalid_argument("FpMatrix: entry not reduced mod p");
  }

  FpMatrix transposed() const {
    FpMatrix t(field, cols, rows);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
  }
};

// Result of exact row reduction.  rref is the reduced row echelon form,
// pivots the pivot column of each nonzero row, kernel a basis of the right
// nullspace (one vector per free column, in column order).  Pivot selection
// is the first row with a nonzero entry, scanning columns left to right, so
// the result is deterministic and independent of any parallel scheduling.
struct FpRowReduce {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  FpMatrix rref;
  std::vector<std::vector<std::uint64_t>> kernel;
};

FpRowReduce row_reduce(const FpMatrix& m);

// Exact rank of a matrix with rational entries (same pivoting rule).
struct RatRowReduce {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  std::vector<std::vector<Rat>> rref;
  std::vector<std::vector<Rat>> kernel;
};

RatRowReduce row_reduce(const std::vector<std::vector<Rat>>& m, std::size_t cols);

// Determinant helpers (exact).
std::uint64_t fp_determinant(const FpMatrix& m);
Rat rat_determinant(std::vector<std::vector<Rat>> m);

} // namespace br
