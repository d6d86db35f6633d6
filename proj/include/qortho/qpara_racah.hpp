#pragma once

// q-para-Racah polynomials R_n(x; a, c, alpha | q), n = 0..N: the finite family
// left by the singular truncation abcd q^{N-1} = 1 of the Askey-Wilson
// polynomials, orthogonal on the bi-lattice
//   x_{2s} = (a^{-1} q^{-s} + a q^s)/2,  x_{2s+1} = (c^{-1} q^{-s} + c q^s)/2.
//
// All t -> 0 limits are the resolved closed forms; nothing here takes a limit
// numerically.

#include "qortho/askey_wilson.hpp"
#include "qortho/lattice.hpp"
#include "qortho/tridiagonal.hpp"

#include <string>
#include <vector>

namespace qortho::qpr {

enum class Parity { Odd, Even };

template <class T> struct Family {
  T a, c, alpha, q;
  int N = 1;

  Parity parity() const { return N % 2 == 1 ? Parity::Odd : Parity::Even; }
  bool odd() const { return N % 2 == 1; }
  /// N = 2j+1 or N = 2j.
  int j() const { return odd() ? (N - 1) / 2 : N / 2; }
  /// 0 for odd N, 1 for even N: d = c^{-1} q^{-j+shift}.
  int shift() const { return odd() ? 0 : 1; }
  bool degenerate() const {
    using std::abs;
    return abs(c - a) <= T(16) * epsilon<T>() * abs(a);
  }

  /// Structural requirements only; positivity is reported by positivity_check.
  void validate() const {
    if (N < 1)
      throw ArgumentError("N must be >= 1");
    if (!(q > T(0) && q < T(1)))
      throw ArgumentError("violated 0 < q < 1");
    if (!(alpha > T(0) && alpha < T(1)))
      throw ArgumentError("violated 0 < alpha < 1");
    if (a == T(0) || c == T(0))
      throw ArgumentError("a and c must be non-zero");
  }
};

/// Limits of the Askey-Wilson A_n and C_n under the truncating parametrization.
/// Odd N uses the printed case formulas; even N uses the same substitution
/// b = a^{-1}q^{-j}, d = c^{-1}q^{-j+1}, where only n = j is singular.
template <class T> aw::Coefficients<T> limiting_aw_coefficients(const Family<T>& f, int n) {
  if (n < 0 || n > f.N + 1)
    throw ArgumentError("limiting coefficient index out of range");
  const T& a = f.a;
  const T& c = f.c;
  const T& q = f.q;
  const T& al = f.alpha;
  const int j = f.j();
  const T one(1);
  auto Q = [&](int k) { return ipow(q, k); };
  aw::Coefficients<T> out;
  out.n = n;
  if (f.odd()) {
    if (n == j)
      out.A = al * (one - a * c * Q(j)) * (c - a) * (one - Q(-j - 1)) / (a * c * (one - one / q));
    else
      out.A = (one - a * c * Q(n)) * (c - a * Q(n - j)) * (one - Q(n - 2 * j - 1)) /
              (a * c * (one - Q(2 * n - 2 * j - 1)) * (one + Q(n - j)));
    if (n == 0)
      out.C = T(0);
    else if (n == j + 1)
      out.C = (one - al) * (one - Q(j + 1)) * (a - c) * (a * c - Q(-j)) / (a * c * (one - q));
    else
      out.C = (one - Q(n)) * (a - c * Q(n - j - 1)) * (a * c - Q(n - 2 * j - 1)) /
              (a * c * (one + Q(n - j - 1)) * (one - Q(2 * n - 2 * j - 1)));
  } else {
    if (n == j)
      out.A = al * (one - a * c * Q(j)) * (one - a * q / c) * (one - Q(-j)) / (a * (one - q));
    else
      out.A = (one - Q(n - j)) * (one - a * c * Q(n)) * (one - a / c * Q(n - j + 1)) *
              (one - Q(n - 2 * j)) / (a * (one - Q(2 * n - 2 * j)) * (one - Q(2 * n - 2 * j + 1)));
    if (n == 0)
      out.C = T(0);
    else if (n == j)
      out.C = (one - al) * a * (one - Q(j)) * (one - c / (a * q)) * (one - Q(-j) / (a * c)) /
              (one - one / q);
    else
      out.C = a * (one - Q(n)) * (one - c / a * Q(n - j - 1)) * (one - Q(n - 2 * j) / (a * c)) *
              (one - Q(n - j)) / ((one - Q(2 * n - 2 * j - 1)) * (one - Q(2 * n - 2 * j)));
  }
  return out;
}

/// b_n, n = 0..N.
template <class T> T diagonal(const Family<T>& f, int n) {
  if (n < 0 || n > f.N)
    throw ArgumentError("b_n index must lie in [0, N]");
  const T& a = f.a;
  const T& c = f.c;
  const T& q = f.q;
  const T& al = f.alpha;
  const int j = f.j();
  const T one(1);
  auto Q = [&](int k) { return ipow(q, k); };
  const T base = (a + one / a) / T(2);
  if (f.odd()) {
    if (n != j && n != j + 1)
      return (a + c) * (Q(j + 1) + one) * Q(n) * (a * c * Q(j) + one) /
             (T(2) * a * c * (Q(j) + Q(n)) * (Q(j + 1) + Q(n)));
    const T weight = n == j ? al : one - al;
    return base +
           weight * (c - a) * (Q(j + 1) - one) * Q(-j) * (a * c * Q(j) - one) /
               (T(2) * a * c * (q - one)) -
           (Q(j) - one) * Q(-j) * (c - a * q) * (a * c * Q(j + 1) - one) /
               (T(2) * a * c * (q * q - one));
  }
  return base +
         (Q(n) - one) * (a * c * Q(2 * j) - Q(n)) * (a * Q(j + 1) - c * Q(n)) /
             (T(2) * a * c * (Q(j) + Q(n)) * (Q(2 * j + 1) - Q(2 * n))) +
         (Q(2 * j) - Q(n)) * (a * c * Q(n) - one) * (c * Q(j) - a * Q(n + 1)) /
             (T(2) * a * c * (Q(j) + Q(n)) * (Q(2 * j) - Q(2 * n + 1)));
}

/// u_n, n = 1..N+1 (u_{N+1} = 0 is the truncation).
template <class T> T off_diagonal(const Family<T>& f, int n) {
  if (n < 1 || n > f.N + 1)
    throw ArgumentError("u_n index must lie in [1, N+1]");
  const T& a = f.a;
  const T& c = f.c;
  const T& q = f.q;
  const T& al = f.alpha;
  const int j = f.j();
  const T one(1);
  auto Q = [&](int k) { return ipow(q, k); };
  const T a2c2 = T(4) * a * a * c * c;
  if (f.odd()) {
    if (n == j + 1)
      return (one - al) * al * (c - a) * (c - a) * Q(-2 * j) * (Q(j + 1) - one) * (Q(j + 1) - one) *
             (a * c * Q(j) - one) * (a * c * Q(j) - one) / (a2c2 * (q - one) * (q - one));
    const T s = Q(j + 1) + Q(n);
    return (Q(n) - one) * (Q(n) - Q(2 * j + 2)) * (a * c * Q(n) - q) *
           (Q(n) - a * c * Q(2 * j + 1)) * (a * Q(n) - c * Q(j + 1)) * (c * Q(n) - a * Q(j + 1)) /
           (a2c2 * s * s * (Q(2 * n) - Q(2 * j + 1)) * (Q(2 * n) - Q(2 * j + 3)));
  }
  if (n == j || n == j + 1) {
    const T weight = n == j ? one - al : al;
    return weight * (c - a) * Q(-2 * j) * (Q(j) - one) * (Q(j + 1) - one) * (a * q - c) *
           (a * c * Q(j) - one) * (a * c * Q(j) - q) / (a2c2 * (q - one) * (q - one) * (q + one));
  }
  const T d = Q(2 * j + 1) - Q(2 * n);
  return (Q(n) - one) * (Q(n) - Q(2 * j + 1)) * (a * c * Q(n) - q) * (Q(n) - a * c * Q(2 * j)) *
         (a * Q(n) - c * Q(j)) * (c * Q(n) - a * Q(j + 1)) /
         (a2c2 * (Q(j) + Q(n)) * (Q(j + 1) + Q(n)) * d * d);
}

template <class T> struct RecurrenceCoefficient {
  T b;
  T u; ///< 0 at n = 0
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

/// Monic R_n at x = (z + 1/z)/2; n = N+1 gives the characteristic polynomial.
template <class T, class V> V eval_recurrence(const TridiagonalSystem<T>& sys, int n, const V& z) {
  if (z == V(0))
    throw ArgumentError("z must be non-zero");
  return sys.eval(n, x_from_z(z));
}

template <class T, class V> V eval_recurrence(const Family<T>& f, int n, const V& z) {
  return eval_recurrence(tridiagonal(f), n, z);
}

// ---------------------------------------------------------------------------
// Explicit expressions.

enum class Branch { Low, MidJ, MidJ1, High };

inline const char* to_string(Branch b) {
  switch (b) {
  case Branch::Low: return "low";
  case Branch::MidJ: return "mid-j";
  case Branch::MidJ1: return "mid-j+1";
  case Branch::High: return "high";
  }
  return "?";
}

template <class T> Branch branch(const Family<T>& f, int n) {
  const int j = f.j();
  if (f.odd()) {
    if (n < j) return Branch::Low;
    if (n == j) return Branch::MidJ;
    if (n == j + 1) return Branch::MidJ1;
    return Branch::High;
  }
  return n <= j ? Branch::Low : Branch::High;
}

namespace detail {

template <class T> struct ExplicitParams {
  int j, M, shift;
  T ac;       ///< a c
  T ad;       ///< a c^{-1} q^{-j+shift}
  T ad_shift; ///< a c^{-1} q^{1+shift}
};

template <class T> ExplicitParams<T> explicit_params(const Family<T>& f) {
  ExplicitParams<T> p;
  p.j = f.j();
  p.M = f.odd() ? 2 * p.j + 1 : 2 * p.j;
  p.shift = f.shift();
  p.ac = f.a * f.c;
  p.ad = f.a / f.c * ipow(f.q, -p.j + p.shift);
  p.ad_shift = f.a / f.c * ipow(f.q, 1 + p.shift);
  return p;
}

template <class T> void require_regular(const T& base, const T& q, int k, const char* name) {
  T qi(1);
  for (int i = 0; i < k; ++i) {
    T factor = T(1) - base * qi;
    if (near_zero(factor, T(1)))
      throw SingularityError(std::string("explicit expression: factor (") + name +
                                 ";q)_k vanishes",
                             i + 1);
    qi *= q;
  }
}

} // namespace detail

/// Normalization eta_n making the explicit expansion monic.
template <class T> T eta(const Family<T>& f, int n) {
  const auto p = detail::explicit_params(f);
  const T& q = f.q;
  const T qn = ipow(q, -n);
  const T tail = ipow(T(-2) * f.a, n) * ipow(q, n * (n + 1) / 2);
  if (n <= p.j) {
    return qpochhammer_multi<T>({q, ipow(q, -p.j), p.ad, p.ac}, q, n) /
           (qpochhammer_multi<T>({ipow(q, n - p.M), qn}, q, n) * tail);
  }
  return f.alpha * qpochhammer(ipow(q, -p.j), q, p.j) * qpochhammer(q, q, n - p.j - 1) *
         qpochhammer_multi<T>({p.ad, p.ac, q}, q, n) /
         (qpochhammer(ipow(q, n - p.M), q, p.M - n) *
          qpochhammer(q, q, 2 * n - 2 * p.j - 2 + p.shift) * qpochhammer(qn, q, n) * tail);
}

/// Branch-appropriate hypergeometric combination times eta_n; equals the
/// recurrence value.
template <class T, class V> V eval_explicit(const Family<T>& f, int n, const V& z);

namespace detail {

// The high branch cancels terms of size q^{-n} and loses up to eight digits
// in binary64, so double inputs are evaluated with the x87 64-bit mantissa.
template <class V> auto widen(const V& v) {
  if constexpr (is_complex_v<V>)
    return std::complex<long double>(v.real(), v.imag());
  else
    return static_cast<long double>(v);
}

template <class V, class W> V narrow(const W& w) {
  if constexpr (is_complex_v<V>)
    return V(static_cast<double>(w.real()), static_cast<double>(w.imag()));
  else
    return static_cast<double>(w);
}

} // namespace detail

template <class T, class V> V eval_explicit(const Family<T>& f, int n, const V& z) {
  if constexpr (std::is_same_v<T, double>) {
    const Family<long double> wide{f.a, f.c, f.alpha, f.q, f.N};
    return detail::narrow<V>(eval_explicit(wide, n, detail::widen(z)));
  }
  if (n < 0 || n > f.N)
    throw ArgumentError("explicit expression degree must lie in [0, N]");
  if (z == V(0))
    throw ArgumentError("z must be non-zero");
  if (n == 0)
    return V(1);
  const auto p = detail::explicit_params(f);
  const T& q = f.q;
  const int kmax = std::min(n, p.j);
  detail::require_regular(p.ac, q, kmax + 1, "ac");
  detail::require_regular(p.ad, q, kmax + 1, "a c^{-1} q^{-j}");
  const V az = V(f.a) * z;
  const V a_over_z = V(f.a) / z;

  auto truncated_sum = [&]() {
    SeriesSpec<V> spec;
    spec.numerator = {V(ipow(q, -p.j - 1)), az, a_over_z};
    spec.denominator = {V(q), V(p.ac), V(p.ad)};
    spec.q = q;
    spec.argument = V(q);
    spec.degree = p.j;
    return terminating_series_eval(spec);
  };
  auto first_sum = [&]() {
    SeriesSpec<V> spec;
    spec.numerator = {V(ipow(q, -n)), V(ipow(q, n - p.M)), az, a_over_z};
    spec.denominator = {V(ipow(q, -p.j)), V(p.ac), V(p.ad), V(q)};
    spec.q = q;
    spec.argument = V(q);
    spec.degree = kmax;
    return terminating_series_eval(spec);
  };

  const T norm = eta(f, n);
  switch (branch(f, n)) {
  case Branch::Low:
    return V(norm) * first_sum();
  case Branch::MidJ:
    return V(norm) * truncated_sum();
  case Branch::MidJ1: {
    const V tail = qpochhammer(V(ipow(q, -p.j - 1)), q, p.j + 1) * phi_basis(f.a, z, q, p.j + 1) *
                   V(ipow(q, p.j + 1)) /
                   V(f.alpha * qpochhammer_multi<T>({q, p.ac, p.ad}, q, p.j + 1));
    return V(norm) * (truncated_sum() + tail);
  }
  case Branch::High: {
    detail::require_regular(p.ac * ipow(q, p.j + 1), q, n - p.j, "ac q^{j+1}");
    detail::require_regular(p.ad_shift, q, n - p.j, "a c^{-1} q");
    const T pref_real = qpochhammer(ipow(q, n - p.M), q, p.M - n) *
                        qpochhammer(ipow(q, -n), q, p.j + 1) *
                        qpochhammer(q, q, n - p.j - 1 + p.shift) * ipow(q, p.j + 1) /
                        (f.alpha * qpochhammer(ipow(q, -p.j), q, p.j) *
                         qpochhammer_multi<T>({q, p.ac, p.ad}, q, p.j + 1));
    const T shifted_a = f.a * ipow(q, p.j + 1);
    SeriesSpec<V> second;
    second.numerator = {V(ipow(q, p.j + 1 - n)), V(ipow(q, n - p.j + p.shift)), V(shifted_a) * z,
                        V(shifted_a) / z};
    second.denominator = {V(ipow(q, p.j + 2)), V(p.ac * ipow(q, p.j + 1)), V(p.ad_shift), V(q)};
    second.q = q;
    second.argument = V(q);
    second.degree = n - p.j - 1;
    const V pref = V(pref_real) * phi_basis(f.a, z, q, p.j + 1);
    return V(norm) * (first_sum() + pref * terminating_series_eval(second));
  }
  }
  return V(0);
}

// ---------------------------------------------------------------------------
// Lattice, characteristic polynomial, weights.

/// Interleaved bi-lattice; z_s = a q^s on even indices, c q^s on odd ones.
template <class T> LatticeWeights<T> lattice(const Family<T>& f) {
  f.validate();
  LatticeWeights<T> lw;
  for (int s = 0; s <= f.N; ++s) {
    const T base = s % 2 == 0 ? f.a : f.c;
    const T zs = base * ipow(f.q, s / 2);
    lw.z.push_back(zs);
    lw.x.push_back(x_from_z(zs));
  }
  return lw;
}

/// (az, a/z; q)_{j+1} (cz, c/z; q)_{j+1 or j}: R_{N+1} up to a constant.
template <class T, class V> V char_poly(const Family<T>& f, const V& z) {
  const int j = f.j();
  return phi_basis(f.a, z, f.q, j + 1) * phi_basis(f.c, z, f.q, f.odd() ? j + 1 : j);
}

/// R_{N+1}(z0) / char_poly(z0), fitted at one regular point.
template <class T> T fit_char_poly_scale(const Family<T>& f, const TridiagonalSystem<T>& sys,
                                         const T& z0 = T(3) / T(10)) {
  const T denom = char_poly(f, z0);
  if (near_zero(denom, T(1)))
    throw ArgumentError("char poly scale: fitting point is a root");
  return eval_recurrence(sys, f.N + 1, z0) / denom;
}

/// Closed-form version of the same constant: each factor pair is
/// -2 a q^i (x - x_{2i}), so the scale is 1 / prod(-2 a q^i) prod(-2 c q^i).
template <class T> T char_poly_scale(const Family<T>& f) {
  const int j = f.j();
  T s(1);
  for (int i = 0; i <= j; ++i)
    s *= T(-2) * f.a * ipow(f.q, i);
  for (int i = 0; i < (f.odd() ? j + 1 : j); ++i)
    s *= T(-2) * f.c * ipow(f.q, i);
  return T(1) / s;
}

/// d/dx R_{N+1} at x_s from the product of the linear factors (x - x_t).
template <class T> T char_poly_derivative(const LatticeWeights<T>& lw, std::size_t s) {
  T d(1);
  for (std::size_t t = 0; t < lw.x.size(); ++t)
    if (t != s)
      d *= lw.x[s] - lw.x[t];
  return d;
}

/// Five-point central difference of the recurrence R_{N+1} in x, step
/// h = rel_step |x|. Only meaningful at extended precision.
template <class T>
T char_poly_derivative_fd(const TridiagonalSystem<T>& sys, const T& x, double rel_step = 1e-6) {
  using std::abs;
  const int n = static_cast<int>(sys.b.size());
  const T h = T(rel_step) * (abs(x) > T(0) ? abs(x) : T(1));
  auto R = [&](const T& xx) { return sys.eval(n, xx); };
  return (R(x - T(2) * h) - T(8) * R(x - h) + T(8) * R(x + h) - R(x + T(2) * h)) / (T(12) * h);
}

/// K_N = sqrt(u_1 ... u_N) of the persymmetric (alpha = 1/2) family.
template <class T> T persymmetric_norm(const Family<T>& f) {
  const T& a = f.a;
  const T& c = f.c;
  const T& q = f.q;
  const int j = f.j();
  const T one(1);
  auto Q = [&](int k) { return ipow(q, k); };
  auto P = [&](const T& x, int k) { return qpochhammer(x, q, k); };
  auto P2 = [&](const T& x, int k) { return qpochhammer(x, q * q, k); };
  if (f.odd()) {
    const T pj = P(Q(-j), j);
    const T p2 = P2(Q(-2 * j), j);
    return (a - c) * Q(-j) * (Q(j + 1) - one) * (a * c * Q(j) - one) * pj * pj *
           P(Q(-2 * j - 1), j) * P(q, j) * P(a * c, j) * P(a * Q(-j) / c, j) *
           P(c * Q(-j) / a, j) * P(Q(-2 * j) / (a * c), j) /
           (a * c * (q - one) * ipow(T(2), 2 * j + 2) * P2(Q(-2 * j - 1), j) * p2 * p2 *
            P2(Q(1 - 2 * j), j));
  }
  const T p2 = P2(Q(-2 * j - 1), j);
  const T pm = P(-q, j);
  return Q(2 * j * j + 1) * (c - a) * (one + Q(j)) * (one - Q(j + 1)) * (one - Q(2 * j + 1)) *
         (c - a * q) * P(q, j) * P(Q(-2 * j - 1), j) * P(a * c / q, j + 2) *
         P(c * Q(-j - 1) / a, j) * P(Q(-2 * j) / (a * c), j) * P(a * Q(-j) / c, j) /
         ((one - q) * (one - q) * (a * c - q) * p2 * p2 * pm * pm * (a - c * Q(j)) *
          (one - a * c * Q(2 * j)) * (c - a * Q(j + 1)));
}

namespace detail {

template <class T> void fill_norms(LatticeWeights<T>& lw, const TridiagonalSystem<T>& sys) {
  lw.h.assign(sys.u.size(), T(1));
  for (std::size_t n = 1; n < sys.u.size(); ++n)
    lw.h[n] = lw.h[n - 1] * sys.u[n];
}

template <class T> void require_weights_defined(const Family<T>& f) {
  f.validate();
  if (f.degenerate())
    throw DegenerateError("c = a: the spectrum is doubly degenerate and the weights are undefined");
}

} // namespace detail

/// Closed-form weights. For even N the even-index weights carry (c/a;q)_j in
/// the denominator; with it both weight-sum identities and the Christoffel
/// route agree.
template <class T> LatticeWeights<T> weights(const Family<T>& f) {
  detail::require_weights_defined(f);
  const auto sys = tridiagonal(f);
  auto lw = lattice(f);
  detail::fill_norms(lw, sys);
  lw.K_N = persymmetric_norm(f);

  const T& a = f.a;
  const T& c = f.c;
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
    const bool even_idx = idx % 2 == 0;
    T w;
    if (f.odd()) {
      const T pre = T(2) * K * ipow(T(2), 2 * j + 1) * Q((2 * j + 1) * s + (j + 1) * j);
      if (even_idx)
        w = -(one - al) * pre * ipow(a, j) * ipow(c, j + 1) * (one - a * a * Q(2 * s)) *
            P(a * a, s) * P(Q(-j), s) * P(a * c, s) * P(a * Q(-j) / c, s) /
            (P(q, j) * P(a * a * q, j) * P(c / a, j + 1) * P(a * c, j + 1) * (one - a * a) *
             P(q, s) * P(a * q / c, s) * P(a * a * Q(j + 1), s) * P(a * c * Q(j + 1), s));
      else
        w = al * pre * ipow(c, j) * ipow(a, j + 1) * (one - c * c * Q(2 * s)) * P(c * c, s) *
            P(Q(-j), s) * P(a * c, s) * P(c * Q(-j) / a, s) /
            (P(q, j) * P(c * c * q, j) * P(a / c, j + 1) * P(a * c, j + 1) * (one - c * c) *
             P(q, s) * P(c * q / a, s) * P(c * c * Q(j + 1), s) * P(a * c * Q(j + 1), s));
    } else {
      if (even_idx)
        w = (one - al) * K * ipow(a, j) * ipow(c, j) * Q(2 * j * s) * (one - a * a * Q(2 * s)) *
            P(a * a, s) * P(Q(-j), s) * P(a * c, s) * P(a * Q(1 - j) / c, s) /
            (P(q, j) * P(a * a * q, j) * P(c / a, j) * P(a * c, j) * (one - a * a) * P(q, s) *
             P(a * q / c, s) * P(a * a * Q(j + 1), s) * P(a * c * Q(j), s));
      else
        w = -al * K * ipow(a, j + 1) * ipow(c, j - 1) * Q(2 * j * s) * (one - c * c * Q(2 * s)) *
            P(c * c, s) * P(Q(1 - j), s) * P(a * c, s) * P(c * Q(-j) / a, s) /
            (P(q, j - 1) * P(c * c * q, j - 1) * P(a / c, j + 1) * P(a * c, j + 1) *
             (one - c * c) * P(q, s) * P(c * q / a, s) * P(c * c * Q(j), s) *
             P(a * c * Q(j + 1), s));
    }
    lw.w[idx] = w;
  }
  lw.signed_measure = !sys.positive || !lw.all_weights_positive();
  return lw;
}

/// Independent route: w_s = h_N / (R_N(x_s) R'_{N+1}(x_s)).
template <class T> LatticeWeights<T> weights_from_christoffel(const Family<T>& f) {
  detail::require_weights_defined(f);
  const auto sys = tridiagonal(f);
  auto lw = lattice(f);
  detail::fill_norms(lw, sys);
  using std::abs;
  using std::sqrt;
  const T hN = lw.h[f.N];
  lw.w.resize(f.N + 1);
  for (int s = 0; s <= f.N; ++s) {
    const T rn = sys.eval(f.N, lw.x[s]);
    const T scale = sqrt(abs(hN));
    if (near_zero(rn, scale, 1024))
      throw DegenerateError("R_N vanishes at lattice point " + std::to_string(s));
    const T dR = char_poly_derivative(lw, s);
    if (dR == T(0))
      throw DegenerateError("repeated lattice point " + std::to_string(s));
    lw.w[s] = hN / (rn * dR);
  }
  lw.signed_measure = !sys.positive || !lw.all_weights_positive();
  return lw;
}

// ---------------------------------------------------------------------------
// q-difference equation.

/// lambda_n = q^{-n}(1 - q^n)(1 - q^{n-N}); lambda_n = lambda_{N-n}.
template <class T> T qdiff_eigenvalue(const T& q, int n, int N) {
  return ipow(q, -n) * (T(1) - ipow(q, n)) * (T(1) - ipow(q, n - N));
}

template <class T> std::array<T, 4> qdiff_parameters(const Family<T>& f) {
  const int j = f.j();
  return {f.a, ipow(f.q, -j) / f.a, f.c, ipow(f.q, -j + f.shift()) / f.c};
}

template <class T, class V>
aw::QDiffResidual<V> qdiff_residual(const Family<T>& f, const TridiagonalSystem<T>& sys, int n,
                                    const V& z) {
  if (n < 0 || n > f.N)
    throw ArgumentError("q-difference degree must lie in [0, N]");
  std::function<V(const V&)> poly = [&](const V& w) { return eval_recurrence(sys, n, w); };
  return aw::qdiff_residual_generic<T, V>(qdiff_parameters(f), f.q,
                                          qdiff_eigenvalue(f.q, n, f.N), poly, z);
}

template <class T, class V> aw::QDiffResidual<V> qdiff_residual(const Family<T>& f, int n, const V& z) {
  return qdiff_residual(f, tridiagonal(f), n, z);
}

// ---------------------------------------------------------------------------
// Positivity.

struct PositivityReport {
  bool conditions_hold = false; ///< the printed parameter inequalities
  std::string violated;         ///< first violated inequality, empty if none
  bool u_scan_positive = false; ///< u_1..u_N > 0 by direct evaluation
  int first_nonpositive = -1;   ///< first n with u_n <= 0, or -1
  bool ok() const { return conditions_hold && u_scan_positive; }
};

template <class T> PositivityReport positivity_check(const Family<T>& f) {
  PositivityReport r;
  const T one(1);
  const T ratio = f.a / f.c;
  if (!(f.q > T(0) && f.q < one))
    r.violated = "0 < q < 1";
  else if (!(f.alpha > T(0) && f.alpha < one))
    r.violated = "0 < alpha < 1";
  else if (f.degenerate())
    r.violated = "c != a";
  else if (!(f.q < ratio && ratio < one / f.q))
    r.violated = "q < a/c < 1/q";
  else if (!(f.a * f.c < one || f.a * f.c > ipow(f.q, 1 - f.N)))
    r.violated = "ac < 1 or ac > q^{1-N}";
  r.conditions_hold = r.violated.empty();

  if (f.N < 1 || !(f.q > T(0) && f.q < one)) {
    r.u_scan_positive = false;
    return r;
  }
  r.u_scan_positive = true;
  for (int n = 1; n <= f.N; ++n) {
    if (!(off_diagonal(f, n) > T(0))) {
      r.u_scan_positive = false;
      r.first_nonpositive = n;
      break;
    }
  }
  return r;
}

} // namespace qortho::qpr
