#pragma once

// q-para-Krawtchouk polynomials Q_n(y; Delta, alpha | q): the theta = ac -> oo
// specialization of q-para-Racah with Delta = a/c fixed, orthogonal on the
// exponential bi-lattice y_{2s} = Delta q^s, y_{2s+1} = q^s.

#include "qortho/lattice.hpp"
#include "qortho/qseries.hpp"
#include "qortho/tridiagonal.hpp"

namespace qortho::qpk {

template <class T> struct Family {
  T Delta, alpha, q;
  int N = 1;

  bool odd() const { return N % 2 == 1; }
  int j() const { return odd() ? (N - 1) / 2 : N / 2; }
  bool degenerate() const {
    using std::abs;
    return abs(Delta - T(1)) <= T(16) * epsilon<T>();
  }

  void validate() const {
    if (N < 1)
      throw ArgumentError("N must be >= 1");
    if (!(q > T(0) && q < T(1)))
      throw ArgumentError("violated 0 < q < 1");
    if (!(alpha > T(0) && alpha < T(1)))
      throw ArgumentError("violated 0 < alpha < 1");
    if (!(Delta > T(0)))
      throw ArgumentError("Delta must be positive");
  }
};

template <class T> T diagonal(const Family<T>& f, int n) {
  if (n < 0 || n > f.N)
    throw ArgumentError("b_n index must lie in [0, N]");
  const T& D = f.Delta;
  const T& q = f.q;
  const T& al = f.alpha;
  const int j = f.j();
  const T one(1);
  auto Q = [&](int k) { return ipow(q, k); };
  if (f.odd()) {
    if (n != j && n != j + 1)
      return Q(n + j) * (one + Q(j + 1)) * (one + D) / ((Q(j) + Q(n)) * (Q(j + 1) + Q(n)));
    const T weight = n == j ? al : one - al;
    return D - weight * (one - Q(j + 1)) * (D - one) / (one - q) +
           q * (one - Q(j)) * (D * q - one) / (one - q * q);
  }
  return D - Q(2 * j) * (Q(n) - one) * (Q(n) - D * Q(j + 1)) / ((Q(j) + Q(n)) * (Q(2 * j + 1) - Q(2 * n))) +
         Q(n) * (Q(2 * j) - Q(n)) * (Q(j) - D * Q(n + 1)) / ((Q(j) + Q(n)) * (Q(2 * j) - Q(2 * n + 1)));
}

template <class T> T off_diagonal(const Family<T>& f, int n) {
  if (n < 1 || n > f.N + 1)
    throw ArgumentError("u_n index must lie in [1, N+1]");
  const T& D = f.Delta;
  const T& q = f.q;
  const T& al = f.alpha;
  const int j = f.j();
  const T one(1);
  auto Q = [&](int k) { return ipow(q, k); };
  if (f.odd()) {
    if (n == j + 1)
      return al * (one - al) * (D - one) * (D - one) * (one - Q(j + 1)) * (one - Q(j + 1)) /
             ((one - q) * (one - q));
    const T s = Q(j + 1) + Q(n);
    return Q(2 * j + 1 + n) * (one - Q(n)) * (Q(2 * j + 2) - Q(n)) * (Q(n) - D * Q(j + 1)) *
           (Q(j + 1) - D * Q(n)) / (s * s * (Q(2 * j + 1) - Q(2 * n)) * (Q(2 * j + 3) - Q(2 * n)));
  }
  if (n == j || n == j + 1) {
    const T weight = n == j ? one - al : al;
    return weight * (one - Q(j)) * (one - Q(j + 1)) * (D - one) * (one - q * D) /
           ((one - q) * (one - q) * (one + q));
  }
  const T d = Q(2 * j + 1) - Q(2 * n);
  return Q(2 * j + n) * (Q(n) - one) * (Q(2 * j + 1) - Q(n)) * (Q(n) - D * Q(j + 1)) *
         (D * Q(n) - Q(j)) / ((Q(j) + Q(n)) * (Q(j + 1) + Q(n)) * d * d);
}

template <class T> struct RecurrenceCoefficient {
  T b;
  T u;
};

template <class T> RecurrenceCoefficient<T> coefficients(const Family<T>& f, int n) {
  if (n < 0 || n > f.N)
    throw ArgumentError("coefficient index must lie in [0, N]");
  return {diagonal(f, n), n == 0 ? T(0) : off_diagonal(f, n)};
}

template <class T> TridiagonalSystem<T> tridiagonal(const Family<T>& f) {
  f.validate();
  TridiagonalSystem<T> sys;
  sys.b.resize(f.N + 1);
  sys.u.assign(f.N + 1, T(0));
  for (int n = 0; n <= f.N; ++n)
    sys.b[n] = diagonal(f, n);
  for (int n = 1; n <= f.N; ++n)
    sys.u[n] = off_diagonal(f, n);
  sys.positive = sys.all_positive();
  return sys;
}

/// Monic Q_n(y) by forward recurrence, 0 <= n <= N+1.
template <class T, class V> V eval(const TridiagonalSystem<T>& sys, int n, const V& y) {
  return sys.eval(n, y);
}

template <class T, class V> V eval(const Family<T>& f, int n, const V& y) {
  return tridiagonal(f).eval(n, y);
}

/// y_{2s} = Delta q^s, y_{2s+1} = q^s in interleaved order.
template <class T> LatticeWeights<T> lattice(const Family<T>& f) {
  f.validate();
  LatticeWeights<T> lw;
  for (int s = 0; s <= f.N; ++s) {
    const T y = (s % 2 == 0 ? f.Delta : T(1)) * ipow(f.q, s / 2);
    lw.x.push_back(y);
    lw.z.push_back(y);
  }
  return lw;
}

template <class T> T persymmetric_norm(const Family<T>& f) {
  const T& D = f.Delta;
  const T& q = f.q;
  const int j = f.j();
  const T one(1);
  auto Q = [&](int k) { return ipow(q, k); };
  auto P = [&](const T& x, int k) { return qpochhammer(x, q, k); };
  const T sign = j % 2 == 0 ? one : -one;
  if (f.odd())
    return sign * Q(j * (j - 1)) * (one - Q(2 * j + 1)) /
           ((one - q) * P(-q, j) * qpochhammer(Q(-2 * j - 1), q * q, j));
  const T p2 = qpochhammer(Q(-2 * j - 1), q * q, j);
  const T pm = P(-q, j);
  return sign * Q(3 * j * (j - 1) / 2) * (Q(j) + one) * (one - Q(j + 1)) *
         (one - Q(2 * j + 1)) * P(Q(-2 * j - 1), j) * (one - D * q) * P(Q(-j - 1) / D, j) *
         P(D * Q(-j), j) / ((one - D * Q(j + 1)) * (one - q) * (one - q) * p2 * p2 * pm * pm);
}

template <class T> LatticeWeights<T> weights(const Family<T>& f) {
  f.validate();
  if (f.degenerate())
    throw DegenerateError("Delta = 1: the two lattice strands coincide");
  const auto sys = tridiagonal(f);
  auto lw = lattice(f);
  lw.h.assign(f.N + 1, T(1));
  for (int n = 1; n <= f.N; ++n)
    lw.h[n] = lw.h[n - 1] * sys.u[n];
  lw.K_N = persymmetric_norm(f);

  const T& D = f.Delta;
  const T& q = f.q;
  const T& al = f.alpha;
  const int j = f.j();
  const T one(1);
  auto Q = [&](int k) { return ipow(q, k); };
  auto P = [&](const T& x, int k) { return qpochhammer(x, q, k); };
  const T& K = lw.K_N;

  lw.w.resize(f.N + 1);
  for (int idx = 0; idx <= f.N; ++idx) {
    const int s = idx / 2;
    T w;
    if (f.odd()) {
      if (idx % 2 == 0)
        w = K * (one - al) * (one - one / D) * Q(s) * P(D * Q(-j), j) * P(Q(-j) / D, j) *
            P(Q(-j), s) * P(D * Q(-j), s) / (P(q, s) * P(one / D, j + 1) * ipow(D, j) * P(D * q, s));
      else
        w = K * al * (one - D) * ipow(D, j) * Q(s) * P(Q(-j) / D, j) * P(D * Q(-j), j) *
            P(Q(-j), s) * P(Q(-j) / D, s) / (P(q, s) * P(D, j + 1) * P(q / D, s));
    } else {
      if (idx % 2 == 0)
        w = K * (one - al) * Q(s) * P(Q(-j), s) * P(D * Q(1 - j), s) /
            (ipow(D, j) * P(q, s) * P(q / D, j) * P(D * q, s));
      else
        w = K * al * ipow(D, j - 1) * (one - Q(j)) * Q(s) * P(Q(1 - j), s) * P(Q(-j) / D, s) /
            ((one - Q(j) / D) * P(q, s) * P(D * q, j) * P(q / D, s));
    }
    lw.w[idx] = w;
  }
  lw.signed_measure = !sys.positive || !lw.all_weights_positive();
  return lw;
}

} // namespace qortho::qpk
