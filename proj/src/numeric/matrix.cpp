#include "strongconv/numeric/matrix.hpp"

#include "strongconv/errors.hpp"

#include <utility>

namespace strongconv::numeric {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector RationalMatrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InputError("matrix product dimension mismatch");
  RationalMatrix p(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        if (rhs(k, c) != 0) p(r, c) += a * rhs(k, c);
      }
    }
  }
  return p;
}

EchelonForm reduced_row_echelon(RationalMatrix m) {
  EchelonForm out;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t sel = pivot_row;
    while (sel < m.rows() && m(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pivot_row) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(sel, k), m(pivot_row, k));
    }
    const Rational inv = 1 / m(pivot_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(pivot_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m(r, c) == 0) continue;
      const Rational f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (m(pivot_row, k) != 0) m(r, k) -= f * m(pivot_row, k);
      }
    }
    out.pivots.push_back(c);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t matrix_rank(const RationalMatrix& input) {
  // Forward elimination only; rows below the pivot are cleared, nothing above.
  RationalMatrix m = input;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t sel = rank;
    while (sel < m.rows() && m(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != rank) {
      for (std::size_t k = c; k < m.cols(); ++k) std::swap(m(sel, k), m(rank, k));
    }
    const Rational inv = 1 / m(rank, c);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, c) == 0) continue;
      const Rational f = m(r, c) * inv;
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (m(rank, k) != 0) m(r, k) -= f * m(rank, k);
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<Vector> nullspace_basis(const RationalMatrix& m) {
  const EchelonForm e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve_square(RationalMatrix a, Vector b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw InputError("solve_square expects a square system");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && a(sel, c) == 0) ++sel;
    if (sel == n) return std::nullopt;
    if (sel != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(sel, k), a(c, k));
      std::swap(b[sel], b[c]);
    }
    const Rational inv = 1 / a(c, c);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const Rational f = a(r, c) * inv;
      for (std::size_t k = c; k < n; ++k) {
        if (a(c, k) != 0) a(r, k) -= f * a(c, k);
      }
      b[r] -= f * b[c];
    }
  }
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a(i, i);
  return x;
}

}  // namespace strongconv::numeric
