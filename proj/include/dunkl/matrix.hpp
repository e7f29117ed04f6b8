#pragma once

#include <cstddef>
#include <vector>

#include "dunkl/domains.hpp"
#include "dunkl/error.hpp"

namespace dunkl {

/// Dense rectangular matrix over one exact coefficient domain.
template <class T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  T& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const T& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  void swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
  }

  /// Rows stacked below this matrix (column counts must agree).
  static Matrix vstack(const Matrix& top, const Matrix& bottom) {
    if (top.cols() != bottom.cols())
      throw DomainMismatch("Matrix: vstack column mismatch");
    Matrix r(top.rows() + bottom.rows(), top.cols());
    for (size_t i = 0; i < top.rows(); ++i)
      for (size_t j = 0; j < top.cols(); ++j) r.at(i, j) = top.at(i, j);
    for (size_t i = 0; i < bottom.rows(); ++i)
      for (size_t j = 0; j < top.cols(); ++j) r.at(top.rows() + i, j) = bottom.at(i, j);
    return r;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<std::decay_t<decltype(f(T(0)))>> {
    Matrix<std::decay_t<decltype(f(T(0)))>> r(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r.at(i, j) = f(at(i, j));
    return r;
  }

 private:
  size_t rows_, cols_;
  std::vector<T> a_;
};

/// Reduced row echelon form over a field. Pivot selection: first row with a
/// nonzero entry (determinism over speed). Returns pivot columns.
template <class T>
std::vector<size_t> rref_in_place(Matrix<T>& m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t sel = row;
    while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    m.swap_rows(sel, row);
    T inv = dom_inv(m.at(row, col));
    for (size_t j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      T f = m.at(i, col);
      for (size_t j = col; j < m.cols(); ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
size_t rank(Matrix<T> m) {
  return rref_in_place(m).size();
}

/// Kernel basis over a field. Vectors are echelon-normalized: each has
/// entry 1 at its own free column and 0 at the other free columns, and
/// M*v = 0 exactly. Count always equals cols - rank.
template <class T>
std::vector<std::vector<T>> kernel_basis(Matrix<T> m) {
  std::vector<size_t> pivots = rref_in_place(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols(), T(0));
    v[free] = T(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Result of division-free (Bareiss) elimination over an integral domain.
template <class T>
struct Echelon {
  Matrix<T> mat;                  // upper-triangular-by-pivots working matrix
  std::vector<size_t> pivot_cols;
  std::vector<size_t> pivot_rows; // in elimination order
  std::vector<T> pivots;          // k-th pivot = det of k x k pivot minor (up to row-order sign)
  int sign = 1;                   // row-swap parity
  size_t rank = 0;
};

/// Fraction-free Gaussian elimination (Bareiss). Entries stay in the domain;
/// the k-th pivot equals (up to the recorded sign) the k x k minor on the
/// pivot rows/columns, so the last pivot of a full-rank square matrix is its
/// determinant. Pivot selection: first nonzero.
template <class T>
Echelon<T> bareiss(Matrix<T> m) {
  Echelon<T> e;
  const size_t rows = m.rows(), cols = m.cols();
  T prev = T(1);
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t sel = row;
    while (sel < rows && m.at(sel, col).is_zero()) ++sel;
    if (sel == rows) continue;
    if (sel != row) {
      m.swap_rows(sel, row);
      e.sign = -e.sign;
    }
    const T pivot = m.at(row, col);
    for (size_t i = row + 1; i < rows; ++i) {
      for (size_t j = col + 1; j < cols; ++j) {
        T num = m.at(i, j) * pivot - m.at(i, col) * m.at(row, j);
        m.at(i, j) = coeff_exact_div(num, prev);
      }
      m.at(i, col) = T(0);
    }
    prev = pivot;
    e.pivot_cols.push_back(col);
    e.pivot_rows.push_back(row);
    e.pivots.push_back(pivot);
    ++row;
  }
  e.rank = e.pivot_cols.size();
  e.mat = std::move(m);
  return e;
}

/// Determinant via Bareiss; square input required.
template <class T>
T det_bareiss(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw DomainMismatch("det: matrix not square");
  Echelon<T> e = bareiss(m);
  if (e.rank < m.rows()) return T(0);
  T d = e.pivots.back();
  return e.sign == 1 ? d : -d;
}

/// Kernel of a Q[c1,c2]-matrix: computed over the fraction field, then each
/// vector is cleared to polynomial entries and content-normalized.
inline std::vector<std::vector<CPoly>> kernel_basis_cleared(const Matrix<CPoly>& m) {
  Matrix<RatFunc> f = m.map([](const CPoly& v) { return to_ratfunc(v); });
  std::vector<std::vector<CPoly>> out;
  for (const auto& kv : kernel_basis(std::move(f))) {
    // Clear denominators across the vector, then strip the content.
    CPoly lcm = CPoly::constant(Rat(1));
    for (const auto& x : kv) {
      CPoly g = cpoly_gcd(lcm, x.den());
      lcm = lcm * cpoly_exact_div(x.den(), g);
    }
    std::vector<CPoly> v;
    v.reserve(kv.size());
    CPoly cont;
    for (const auto& x : kv) {
      CPoly entry = x.num() * cpoly_exact_div(lcm, x.den());
      cont = cpoly_gcd(cont, entry);
      v.push_back(std::move(entry));
    }
    Rat rc(0);
    for (const auto& x : v) rc = rat_gcd(rc, content(x));
    if (!cont.is_zero() && !rc.is_zero()) {
      CPoly full = cont * rc;
      for (auto& x : v) x = cpoly_exact_div(x, full);
    }
    for (auto& x : v) {
      if (x.is_zero()) continue;
      if (x.leading_coeff().sign() < 0)
        for (auto& y : v) y = -y;
      break;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace dunkl
