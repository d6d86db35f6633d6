#pragma once

// Batch evaluation of a recurrence over many points and the Gram matrix of
// the resulting table. The OpenMP kernels are double-only; the serial
// versions are templates and double as the reference for testing.

#include "qortho/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

namespace qortho::batch {

/// Row-major dense matrix.
template <class T> struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<T> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, T(0)) {}
  T& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

template <class T> struct GramError {
  T off_diagonal{0}; ///< max |G_nm| / sqrt(h_n h_m), n != m
  T diagonal{0};     ///< max |G_nn - h_n| / h_n
};

/// G against diag(h), both relative.
template <class T> GramError<T> gram_error(const Matrix<T>& gram, std::span<const T> h) {
  using std::abs;
  using std::sqrt;
  GramError<T> e;
  for (std::size_t n = 0; n < gram.rows; ++n)
    for (std::size_t m = 0; m < gram.cols; ++m) {
      if (n == m)
        e.diagonal = std::max<T>(e.diagonal, abs(gram(n, n) - h[n]) / abs(h[n]));
      else
        e.off_diagonal = std::max<T>(e.off_diagonal, abs(gram(n, m)) / sqrt(abs(h[n] * h[m])));
    }
  return e;
}

namespace serial {

/// table(n, s) = P_n(x_s) for n = 0..rows-1, rows <= N+2.
template <class T>
Matrix<T> evaluate_table(const TridiagonalSystem<T>& sys, std::span<const T> x, std::size_t rows) {
  Matrix<T> t(rows, x.size());
  for (std::size_t s = 0; s < x.size(); ++s) {
    T prev(0), cur(1);
    for (std::size_t n = 0; n < rows; ++n) {
      t(n, s) = cur;
      if (n + 1 == rows)
        break;
      T next = (x[s] - sys.b[n]) * cur - (n == 0 ? T(0) : sys.u[n]) * prev;
      prev = cur;
      cur = next;
    }
  }
  return t;
}

/// G_nm = sum_s w_s P_n(x_s) P_m(x_s).
template <class T> Matrix<T> gram_matrix(const Matrix<T>& table, std::span<const T> w) {
  Matrix<T> g(table.rows, table.rows);
  for (std::size_t n = 0; n < table.rows; ++n)
    for (std::size_t m = 0; m <= n; ++m) {
      T acc(0);
      for (std::size_t s = 0; s < table.cols; ++s)
        acc += w[s] * table(n, s) * table(m, s);
      g(n, m) = acc;
      g(m, n) = acc;
    }
  return g;
}

} // namespace serial

/// OpenMP: points are independent, one recurrence per point.
Matrix<double> evaluate_table(const TridiagonalSystem<double>& sys, std::span<const double> x,
                              std::size_t rows);

/// OpenMP over the lower triangle; the inner sum keeps the serial order so
/// results match the reference bit for bit.
Matrix<double> gram_matrix(const Matrix<double>& table, std::span<const double> w);

} // namespace qortho::batch
