#pragma once

// Single-lattice reduction c = a q^{1/2}, alpha = 1/2: the identity with monic
// q-Racah polynomials in base q^{1/2}, and the q -> 1 dual-Hahn limit of the
// limiting Askey-Wilson recurrence coefficients.

#include "qortho/qpara_racah.hpp"

#include <cmath>
#include <vector>

namespace qortho::connections {

/// q-Racah parameters (alpha, beta, gamma, delta | q) in the Koekoek-Lesky-
/// Swarttouw convention; named here by position to avoid clashing with the
/// q-para-Racah deformation parameter.
template <class T> struct QRacahParams {
  T p_alpha, p_beta, p_gamma, p_delta, q;
};

/// Recurrence data of the normalized q-Racah recurrence
///   y p_n = p_{n+1} + (1 + gamma delta q - A_n - C_n) p_n + A_{n-1} C_n p_{n-1}.
template <class T> aw::Coefficients<T> qracah_coefficients(const QRacahParams<T>& p, int n) {
  const T one(1);
  const T ab = p.p_alpha * p.p_beta;
  auto Q = [&](int k) { return ipow(p.q, k); };
  aw::Coefficients<T> out;
  out.n = n;
  const T dA1 = one - ab * Q(2 * n + 1);
  const T dA2 = one - ab * Q(2 * n + 2);
  if (near_zero(dA1, one) || near_zero(dA2, one))
    throw SingularityError("q-Racah A_n denominator vanishes", n);
  out.A = (one - p.p_alpha * Q(n + 1)) * (one - ab * Q(n + 1)) *
          (one - p.p_beta * p.p_delta * Q(n + 1)) * (one - p.p_gamma * Q(n + 1)) / (dA1 * dA2);
  if (n == 0)
    return out;
  const T dC1 = one - ab * Q(2 * n);
  if (near_zero(dC1, one))
    throw SingularityError("q-Racah C_n denominator vanishes", n);
  out.C = p.q * (one - Q(n)) * (one - p.p_beta * Q(n)) * (p.p_gamma - ab * Q(n)) *
          (p.p_delta - p.p_alpha * Q(n)) / (dC1 * dA1);
  return out;
}

template <class T, class V> V qracah_monic_eval(const QRacahParams<T>& p, int n, const V& y) {
  if (n < 0)
    throw ArgumentError("degree must be non-negative");
  const T base = T(1) + p.p_gamma * p.p_delta * p.q;
  V prev(0), cur(1);
  aw::Coefficients<T> last;
  for (int k = 0; k < n; ++k) {
    const auto ck = qracah_coefficients(p, k);
    const T diag = base - ck.A - ck.C;
    const T sub = k == 0 ? T(0) : last.A * ck.C;
    V next = (y - V(diag)) * cur - V(sub) * prev;
    prev = cur;
    cur = next;
    last = ck;
  }
  return cur;
}

template <class T> T sqrt_of(const T& v) {
  using std::sqrt;
  return sqrt(v);
}

/// (a q^{-1/4}, -a^{-1} q^{-N/2-1/4}, -a q^{-1/4}, -a q^{-1/4} | q^{1/2}).
template <class T> QRacahParams<T> qracah_params_for(const T& a, const T& q, int N) {
  using std::pow;
  const T quarter = pow(q, T(-1) / T(4));
  return {a * quarter, -pow(q, -T(2 * N + 1) / T(4)) / a, -a * quarter, -a * quarter, sqrt_of(q)};
}

/// q-para-Racah family on the single lattice.
template <class T> qpr::Family<T> single_lattice_family(const T& a, const T& q, int N) {
  return {a, a * sqrt_of(q), T(1) / T(2), q, N};
}

template <class V> struct IdentityResidual {
  real_of_t<V> residual{0}; ///< max_n |LHS - RHS|
  real_of_t<V> scale{0};    ///< max_n max(|LHS|, |RHS|)
};

/// R_n(x; a, a q^{1/2}, 1/2 | q) against (2a)^{-n} p_n(2 a x) for n = 0..N.
template <class T, class V>
IdentityResidual<V> verify_qracah_identity(const T& a, const T& q, int N, const V& z) {
  using std::abs;
  if (z == V(0))
    throw ArgumentError("z must be non-zero");
  const auto fam = single_lattice_family(a, q, N);
  const auto sys = qpr::tridiagonal(fam);
  const auto params = qracah_params_for(a, q, N);
  const V x = x_from_z(z);
  IdentityResidual<V> out;
  for (int n = 0; n <= N; ++n) {
    const V lhs = sys.eval(n, x);
    const V rhs = qracah_monic_eval(params, n, V(T(2) * a) * x) / V(ipow(T(2) * a, n));
    out.residual = std::max<real_of_t<V>>(out.residual, abs(lhs - rhs));
    out.scale = std::max<real_of_t<V>>(out.scale, std::max<real_of_t<V>>(abs(lhs), abs(rhs)));
  }
  return out;
}

template <class T> struct DualHahnLimit {
  T limA, limC;
  T targetA, targetC;
};

/// Polynomial (Neville) extrapolation to h = 0 of values sampled at h_k.
/// Returns the diagonal of the tableau.
template <class T>
std::vector<T> neville_diagonal(const std::vector<T>& h, const std::vector<T>& values) {
  const std::size_t m = h.size();
  // table[level][i] extrapolates from points i-level..i
  std::vector<std::vector<T>> table{values};
  for (std::size_t level = 1; level < m; ++level) {
    std::vector<T> next(m, T(0));
    for (std::size_t i = level; i < m; ++i)
      next[i] = (h[i - level] * table.back()[i] - h[i] * table.back()[i - 1]) / (h[i - level] - h[i]);
    table.push_back(next);
  }
  std::vector<T> d;
  for (std::size_t level = 0; level < m; ++level)
    d.push_back(table[level][m - 1]);
  return d;
}

/// q -> 1 limits of A_n/(1-q^{1/2})^2 and C_n/(1-q^{1/2})^2 at alpha = 1/2,
/// c = a q^{1/2}, a = q^{a_exponent}, sampled along q^{1/2} = 1 - 2^{-k},
/// k = 6..16, with the dual-Hahn targets for gamma = delta = (4a-1)/2.
template <class T> DualHahnLimit<T> dual_hahn_limit(const T& a_exponent, int N, int n) {
  using std::abs;
  using std::pow;
  if (N < 1 || n < 0 || n > N)
    throw ArgumentError("dual_hahn_limit needs 0 <= n <= N, N >= 1");
  std::vector<T> h, va, vc;
  for (int k = 6; k <= 16; ++k) {
    const T eps = ipow(T(2), -k);
    const T root = T(1) - eps;
    const T q = root * root;
    const T a = pow(q, a_exponent);
    qpr::Family<T> fam{a, a * root, T(1) / T(2), q, N};
    const auto co = qpr::limiting_aw_coefficients(fam, n);
    h.push_back(eps);
    va.push_back(co.A / (eps * eps));
    vc.push_back(co.C / (eps * eps));
  }
  const auto da = neville_diagonal(h, va);
  const auto dc = neville_diagonal(h, vc);

  // the extrapolation levels must settle: the last correction is much smaller
  // than the first one
  auto settled = [](const std::vector<T>& d) {
    const T first = abs(d[1] - d[0]);
    const T last = abs(d[d.size() - 1] - d[d.size() - 2]);
    return last <= first * T(1e-6) || last <= T(1e-30);
  };
  if (!settled(da) || !settled(dc))
    throw ConvergenceError("dual-Hahn extrapolation did not contract");

  const T g = (T(4) * a_exponent - T(1)) / T(2);
  const T nn(n), NN(N);
  return {da.back(), dc.back(), (nn + g + T(1)) * (nn - NN), nn * (nn - g - NN - T(1))};
}

} // namespace qortho::connections
