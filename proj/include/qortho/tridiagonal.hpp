#pragma once

#include "qortho/scalar.hpp"

#include <algorithm>
#include <vector>

namespace qortho {

/// Monic three-term recurrence x P_n = P_{n+1} + b_n P_n + u_n P_{n-1},
/// n = 0..N, P_{-1} = 0, P_0 = 1. `u[0]` is unused and kept at zero.
template <class T> struct TridiagonalSystem {
  std::vector<T> b;
  std::vector<T> u;
  bool positive = false;

  int N() const { return static_cast<int>(b.size()) - 1; }

  bool all_positive() const {
    return std::all_of(u.begin() + 1, u.end(), [](const T& v) { return v > T(0); });
  }

  /// P_n(x) for 0 <= n <= N+1.
  template <class V> V eval(int n, const V& x) const {
    V prev(0), cur(1);
    for (int k = 0; k < n; ++k) {
      V next = (x - V(b[k])) * cur - V(k == 0 ? T(0) : u[k]) * prev;
      prev = cur;
      cur = next;
    }
    return cur;
  }

  /// P_0(x) .. P_{N+1}(x).
  template <class V> std::vector<V> eval_all(const V& x) const {
    std::vector<V> out(b.size() + 1);
    V prev(0), cur(1);
    out[0] = cur;
    for (std::size_t k = 0; k < b.size(); ++k) {
      V next = (x - V(b[k])) * cur - V(k == 0 ? T(0) : u[k]) * prev;
      prev = cur;
      cur = next;
      out[k + 1] = cur;
    }
    return out;
  }

  /// max_n |b_n - b_{N-n}| and |u_n - u_{N-n+1}|.
  T persymmetry_residual() const {
    using std::abs;
    T r(0);
    const int n_max = N();
    for (int n = 0; n <= n_max; ++n)
      r = std::max<T>(r, abs(b[n] - b[n_max - n]));
    for (int n = 1; n <= n_max; ++n)
      r = std::max<T>(r, abs(u[n] - u[n_max - n + 1]));
    return r;
  }
};

} // namespace qortho
