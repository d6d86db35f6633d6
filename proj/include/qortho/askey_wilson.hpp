#pragma once

// Askey-Wilson polynomials W_n(x; a, b, c, d | q): the parent family of the
// singular truncation.

#include "qortho/qseries.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace qortho::aw {

template <class T> struct Params {
  T a, b, c, d, q;
};

template <class T> struct Coefficients {
  int n = 0;
  T A{0};
  T C{0};
};

template <class T> Coefficients<T> recurrence_coeffs(const Params<T>& p, int n) {
  detail::require_nome(p.q);
  if (n < 0)
    throw ArgumentError("Askey-Wilson recurrence index must be non-negative");
  const T abcd = p.a * p.b * p.c * p.d;
  const T one(1);
  auto qn = [&](int k) { return ipow(p.q, k); };

  const T dA1 = one - abcd * qn(2 * n - 1);
  const T dA2 = one - abcd * qn(2 * n);
  if (near_zero(dA1, one) || near_zero(dA2, one))
    throw SingularityError("Askey-Wilson A_n: 1 - abcd q^{2n-1} or 1 - abcd q^{2n} vanishes", n);
  Coefficients<T> out;
  out.n = n;
  out.A = (one - p.a * p.b * qn(n)) * (one - p.a * p.c * qn(n)) * (one - p.a * p.d * qn(n)) *
          (one - abcd * qn(n - 1)) / (p.a * dA1 * dA2);
  if (n == 0)
    return out; // C_0 = 0; the formula is never read
  const T dC1 = one - abcd * qn(2 * n - 2);
  if (near_zero(dC1, one))
    throw SingularityError("Askey-Wilson C_n: 1 - abcd q^{2n-2} vanishes", n);
  out.C = p.a * (one - qn(n)) * (one - p.b * p.c * qn(n - 1)) * (one - p.b * p.d * qn(n - 1)) *
          (one - p.c * p.d * qn(n - 1)) / (dC1 * dA1);
  return out;
}

/// W_n at x = (z + 1/z)/2 through the terminating 4phi3.
template <class T, class V> V explicit_eval(const Params<T>& p, int n, const V& z) {
  if (n < 0)
    throw ArgumentError("degree must be non-negative");
  if (z == V(0))
    throw ArgumentError("z must be non-zero");
  const T abcd = p.a * p.b * p.c * p.d;
  SeriesSpec<V> spec;
  spec.numerator = {V(ipow(p.q, -n)), V(abcd * ipow(p.q, n - 1)), V(p.a) * z, V(p.a) / z};
  spec.denominator = {V(p.a * p.b), V(p.a * p.c), V(p.a * p.d), V(p.q)};
  spec.q = p.q;
  spec.argument = V(p.q);
  spec.degree = n;
  return terminating_series_eval(spec);
}

/// Monic W~_n by forward recurrence.
template <class T, class V> V monic_eval(const Params<T>& p, int n, const V& z) {
  if (n < 0)
    throw ArgumentError("degree must be non-negative");
  if (z == V(0))
    throw ArgumentError("z must be non-zero");
  const V x = x_from_z(z);
  const T base = p.a + T(1) / p.a;
  V prev(0), cur(1);
  Coefficients<T> last;
  for (int k = 0; k < n; ++k) {
    auto ck = recurrence_coeffs(p, k);
    T diag = (base - ck.A - ck.C) / T(2);
    T sub = k == 0 ? T(0) : last.A * ck.C / T(4);
    V next = (x - V(diag)) * cur - V(sub) * prev;
    prev = cur;
    cur = next;
    last = ck;
  }
  return cur;
}

/// 2^n / (A_0 A_1 ... A_{n-1}): leading coefficient of W_n in x.
template <class T> T monic_scale(const Params<T>& p, int n) {
  T s(1);
  for (int k = 0; k < n; ++k)
    s *= T(2) / recurrence_coeffs(p, k).A;
  return s;
}

template <class V> struct QDiffResidual {
  V residual;
  real_of_t<V> scale; ///< largest magnitude among the operator terms
};

/// (1 - p0 z)(1 - p1 z)(1 - p2 z)(1 - p3 z) / ((1 - z^2)(1 - q z^2)).
template <class T, class V>
V qdiff_coefficient(const std::array<T, 4>& params, const T& q, const V& z) {
  const V one(1);
  const V den = (one - z * z) * (one - V(q) * z * z);
  if (near_zero(den, real_of_t<V>(1)))
    throw EvaluationPointError("q-difference coefficient is singular: z^2 is 1 or 1/q");
  V num(1);
  for (const T& pk : params)
    num *= one - V(pk) * z;
  return num / den;
}

/// LHS - RHS of lambda f(z) = A(z)[f(qz) - f(z)] + A(1/z)[f(z/q) - f(z)], A(1/z)
/// standing in for the conjugate so that real z off the unit circle is allowed.
template <class T, class V>
QDiffResidual<V> qdiff_residual_generic(const std::array<T, 4>& params, const T& q,
                                        const T& lambda, const std::function<V(const V&)>& f,
                                        const V& z) {
  using std::abs;
  if (z == V(0))
    throw ArgumentError("z must be non-zero");
  const V Az = qdiff_coefficient(params, q, z);
  const V Abar = qdiff_coefficient(params, q, V(1) / z);
  const V f0 = f(z);
  const V fp = f(V(q) * z);
  const V fm = f(z / V(q));
  const V lhs = V(lambda) * f0;
  const V t1 = Az * fp;
  const V t2 = (Az + Abar) * f0;
  const V t3 = Abar * fm;
  QDiffResidual<V> out;
  out.residual = lhs - (t1 - t2 + t3);
  out.scale = std::max({abs(lhs), abs(t1), abs(t2), abs(t3)});
  return out;
}

template <class T, class V> QDiffResidual<V> qdiff_residual(const Params<T>& p, int n, const V& z) {
  const T lambda =
      ipow(p.q, -n) * (T(1) - ipow(p.q, n)) * (T(1) - p.a * p.b * p.c * p.d * ipow(p.q, n - 1));
  std::function<V(const V&)> f = [&](const V& w) { return explicit_eval(p, n, w); };
  return qdiff_residual_generic<T, V>({p.a, p.b, p.c, p.d}, p.q, lambda, f, z);
}

enum class Truncation { QRacahStyle, Singular, None };

inline const char* to_string(Truncation t) {
  switch (t) {
  case Truncation::QRacahStyle: return "qracah";
  case Truncation::Singular: return "singular";
  case Truncation::None: return "none";
  }
  return "?";
}

/// Which mechanism makes A_N C_{N+1} vanish, tested at relative `tol`.
template <class T> Truncation truncation_check(const Params<T>& p, int N, double tol = 1e-12) {
  using std::abs;
  if (N < 1)
    throw ArgumentError("truncation_check needs N >= 1");
  const T abcd = p.a * p.b * p.c * p.d;
  if (abs(abcd * ipow(p.q, N - 1) - T(1)) <= T(tol))
    return Truncation::Singular;
  const std::array<T, 6> pairs = {p.a * p.b, p.a * p.c, p.a * p.d,
                                  p.b * p.c, p.b * p.d, p.c * p.d};
  const T qN = ipow(p.q, N);
  for (const T& prod : pairs)
    if (abs(prod * qN - T(1)) <= T(tol))
      return Truncation::QRacahStyle;
  return Truncation::None;
}

} // namespace qortho::aw
