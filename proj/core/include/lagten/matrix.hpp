#pragma once

#include <algorithm>
#include <cassert>
#include <concepts>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "lagten/error.hpp"

namespace lagten {

/// Anything with the arithmetic interface of FiniteField or Rationals.
template <class F>
concept Field = requires(const F& f, const typename F::Elem& a) {
  { f.zero() } -> std::convertible_to<typename F::Elem>;
  { f.one() } -> std::convertible_to<typename F::Elem>;
  { f.add(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.sub(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.mul(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.neg(a) } -> std::convertible_to<typename F::Elem>;
  { f.inv(a) } -> std::convertible_to<typename F::Elem>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
};

/// Dense row-major matrix. Default-constructed entries are zero for every
/// scalar type used in this project.
template <class E>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, const E& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  E& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const E& operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  std::span<E> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const E> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_,
                     data_.begin() + b * cols_);
  }

  void append_row(std::span<const E> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw Error("Matrix::append_row: width mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
    Matrix s(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
      for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
    return s;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<E> data_;
};

template <Field F>
Matrix<typename F::Elem> identity(const F& f, std::size_t n) {
  Matrix<typename F::Elem> m(n, n, f.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

template <Field F>
Matrix<typename F::Elem> multiply(const F& f, const Matrix<typename F::Elem>& a,
                                  const Matrix<typename F::Elem>& b) {
  if (a.cols() != b.rows()) throw Error("multiply: dimension mismatch");
  Matrix<typename F::Elem> c(a.rows(), b.cols(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (f.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(a(i, k), b(k, j)));
    }
  return c;
}

/// In-place reduced row echelon form. The pivot of each column is the first
/// nonzero entry at or below the current row. Returns the pivot columns.
template <Field F>
std::vector<std::size_t> rref(const F& f, Matrix<typename F::Elem>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && f.is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(piv, r);
    const auto inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      const auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <Field F>
std::size_t rank(const F& f, Matrix<typename F::Elem> m) {
  // Forward elimination only.
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && f.is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(piv, r);
    const auto inv = f.inv(m(r, c));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (f.is_zero(m(i, c))) continue;
      const auto factor = f.mul(m(i, c), inv);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    ++r;
  }
  return r;
}

/// Basis of the right null space, one basis vector per column.
template <Field F>
Matrix<typename F::Elem> kernel(const F& f, Matrix<typename F::Elem> m) {
  const auto pivots = rref(f, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix<typename F::Elem> k(m.cols(), free_cols.size(), f.zero());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    k(free_cols[j], j) = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) k(pivots[i], j) = f.neg(m(i, free_cols[j]));
  }
  return k;
}

/// Basis of the row space of the left null space, one vector per row
/// (vectors y with y * m = 0).
template <Field F>
Matrix<typename F::Elem> left_kernel(const F& f, const Matrix<typename F::Elem>& m) {
  return kernel(f, m.transposed()).transposed();
}

/// Some X with m * X = rhs; throws InconsistentSystem when rhs is outside
/// the column space.
template <Field F>
Matrix<typename F::Elem> solve(const F& f, const Matrix<typename F::Elem>& m,
                               const Matrix<typename F::Elem>& rhs) {
  if (m.rows() != rhs.rows()) throw Error("solve: row count mismatch");
  Matrix<typename F::Elem> aug(m.rows(), m.cols() + rhs.cols(), f.zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    for (std::size_t j = 0; j < rhs.cols(); ++j) aug(i, m.cols() + j) = rhs(i, j);
  }
  const auto pivots = rref(f, aug);
  Matrix<typename F::Elem> x(m.cols(), rhs.cols(), f.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= m.cols()) throw InconsistentSystem("solve: right-hand side outside column space");
    for (std::size_t j = 0; j < rhs.cols(); ++j) x(pivots[i], j) = aug(i, m.cols() + j);
  }
  return x;
}

template <Field F>
typename F::Elem det(const F& f, Matrix<typename F::Elem> m) {
  if (m.rows() != m.cols()) throw Error("det: matrix is not square");
  const std::size_t n = m.rows();
  auto result = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && f.is_zero(m(piv, c))) ++piv;
    if (piv == n) return f.zero();
    if (piv != c) {
      m.swap_rows(piv, c);
      result = f.neg(result);
    }
    result = f.mul(result, m(c, c));
    const auto inv = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (f.is_zero(m(i, c))) continue;
      const auto factor = f.mul(m(i, c), inv);
      for (std::size_t j = c; j < n; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(c, j)));
    }
  }
  return result;
}

/// Classical adjoint: adj(m)(i, j) = (-1)^{i+j} det(m without row j, column i).
template <Field F>
Matrix<typename F::Elem> adjugate(const F& f, const Matrix<typename F::Elem>& m) {
  if (m.rows() != m.cols()) throw Error("adjugate: matrix is not square");
  const std::size_t n = m.rows();
  Matrix<typename F::Elem> adj(n, n, f.zero());
  if (n == 1) {
    adj(0, 0) = f.one();
    return adj;
  }
  std::vector<std::size_t> rows_keep(n - 1), cols_keep(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t a = 0, t = 0; a < n; ++a)
        if (a != j) rows_keep[t++] = a;
      for (std::size_t b = 0, t = 0; b < n; ++b)
        if (b != i) cols_keep[t++] = b;
      auto minor = det(f, m.submatrix(rows_keep, cols_keep));
      adj(i, j) = (i + j) % 2 ? f.neg(minor) : minor;
    }
  }
  return adj;
}

template <Field F>
Matrix<typename F::Elem> inverse(const F& f, const Matrix<typename F::Elem>& m) {
  if (m.rows() != m.cols()) throw Error("inverse: matrix is not square");
  return solve(f, m, identity(f, m.rows()));
}

template <Field F>
bool is_zero_matrix(const F& f, const Matrix<typename F::Elem>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!f.is_zero(m(i, j))) return false;
  return true;
}

}  // namespace lagten
