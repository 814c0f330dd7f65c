#include "lagten/smith.hpp"

#include <utility>

namespace lagten {

IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error("int_multiply: dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

mpz_class int_det(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw Error("int_det: matrix is not square");
  IntMatrix m = input;
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      m.swap_rows(piv, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

void row_op(IntMatrix& m, std::size_t target, std::size_t source, const mpz_class& q) {
  // row_target -= q * row_source
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) -= q * m(source, j);
}

void col_op(IntMatrix& m, std::size_t target, std::size_t source, const mpz_class& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) -= q * m(i, source);
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

IntMatrix int_identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  IntMatrix d = input;
  const std::size_t rows = d.rows(), cols = d.cols();
  IntMatrix left = int_identity(rows), right = int_identity(cols);

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    // Move the smallest nonzero entry of the remaining block to (t, t).
    for (;;) {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 && (bi == rows || abs(d(i, j)) < abs(d(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == rows) goto done;
      d.swap_rows(t, bi);
      left.swap_rows(t, bi);
      swap_cols(d, t, bj);
      swap_cols(right, t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        row_op(d, i, t, q);
        row_op(left, i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        col_op(d, j, t, q);
        col_op(right, j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold a row with an entry not divisible by the pivot.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            row_op(d, t, i, -1);
            row_op(left, t, i, -1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < rows; ++j) left(t, j) = -left(t, j);
    }
  }
done:
  SmithForm out;
  for (std::size_t t = 0; t < steps; ++t)
    if (d(t, t) != 0) out.factors.push_back(d(t, t));
  if (int_multiply(int_multiply(left, input), right) != d)
    throw Error("smith_normal_form: transform check failed");
  out.diagonal = std::move(d);
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

std::vector<mpz_class> cokernel_orders(const IntMatrix& m) {
  std::vector<mpz_class> out;
  for (const auto& f : smith_normal_form(m).factors)
    if (f != 1) out.push_back(f);
  return out;
}

}  // namespace lagten
