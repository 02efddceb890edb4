#pragma once

#include "strongconv/numeric/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace strongconv::numeric {

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& rhs) const;
  bool operator==(const RationalMatrix& rhs) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Exact rank over Q by Gaussian elimination.
std::size_t matrix_rank(const RationalMatrix& m);

/// Reduced row echelon form; returns pivot columns alongside.
struct EchelonForm {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
};
EchelonForm reduced_row_echelon(RationalMatrix m);

/// Basis of {x : m x = 0}, one vector per free column of the RREF, so the
/// result depends only on the row space of m.
std::vector<Vector> nullspace_basis(const RationalMatrix& m);

/// Unique solution of a square system, or nullopt when singular.
std::optional<Vector> solve_square(RationalMatrix a, Vector b);

}  // namespace strongconv::numeric
