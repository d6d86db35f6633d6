#include "qortho/batch.hpp"

namespace qortho::batch {

Matrix<double> evaluate_table(const TridiagonalSystem<double>& sys, std::span<const double> x,
                              std::size_t rows) {
  Matrix<double> t(rows, x.size());
  const auto npts = static_cast<long>(x.size());
#pragma omp parallel for schedule(static)
  for (long s = 0; s < npts; ++s) {
    double prev = 0.0, cur = 1.0;
    for (std::size_t n = 0; n < rows; ++n) {
      t(n, s) = cur;
      if (n + 1 == rows)
        break;
      const double next = (x[s] - sys.b[n]) * cur - (n == 0 ? 0.0 : sys.u[n]) * prev;
      prev = cur;
      cur = next;
    }
  }
  return t;
}

Matrix<double> gram_matrix(const Matrix<double>& table, std::span<const double> w) {
  const std::size_t r = table.rows;
  Matrix<double> g(r, r);
  const auto pairs = static_cast<long>(r * (r + 1) / 2);
#pragma omp parallel for schedule(dynamic, 4)
  for (long p = 0; p < pairs; ++p) {
    // unrank p into (n, m) with m <= n
    std::size_t n = 0;
    while ((n + 1) * (n + 2) / 2 <= static_cast<std::size_t>(p))
      ++n;
    const std::size_t m = static_cast<std::size_t>(p) - n * (n + 1) / 2;
    double acc = 0.0;
    for (std::size_t s = 0; s < table.cols; ++s)
      acc += w[s] * table(n, s) * table(m, s);
    g(n, m) = acc;
    g(m, n) = acc;
  }
  return g;
}

} // namespace qortho::batch
