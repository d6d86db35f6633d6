#pragma once

#include "qortho/scalar.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace qortho {

/// Orthogonality grid in interleaved index order (2s on the first strand,
/// 2s+1 on the second), never sorted by value.
template <class T> struct LatticeWeights {
  std::vector<T> x; ///< grid points
  std::vector<T> z; ///< real z with x = (z + 1/z)/2; equals x for exponential lattices
  std::vector<T> w; ///< weights, empty until filled
  std::vector<T> h; ///< h_n = u_1 ... u_n, h_0 = 1
  T K_N{0};
  bool signed_measure = false;

  bool all_weights_positive() const {
    return std::all_of(w.begin(), w.end(), [](const T& v) { return v > T(0); });
  }

  T sum_even() const {
    T s(0);
    for (std::size_t i = 0; i < w.size(); i += 2)
      s += w[i];
    return s;
  }

  T sum_odd() const {
    T s(0);
    for (std::size_t i = 1; i < w.size(); i += 2)
      s += w[i];
    return s;
  }
};

/// rank[s] = position of x_s in the lattice sorted ascending.
template <class T> std::vector<int> ascending_rank(const LatticeWeights<T>& lw) {
  std::vector<int> order(lw.x.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int k) { return lw.x[i] < lw.x[k]; });
  std::vector<int> rank(order.size());
  for (std::size_t r = 0; r < order.size(); ++r)
    rank[order[r]] = static_cast<int>(r);
  return rank;
}

} // namespace qortho
