#pragma once

// Shared test fixtures: random families inside the positivity box and the
// t -> 0 substitution oracle into the raw Askey-Wilson coefficients.

#include "qortho/verify.hpp"

#include <cmath>
#include <complex>

namespace qortho::support {

using verify::Sampler;

/// Smallest relative gap between lattice z values; tiny gaps make the
/// weights ill-conditioned even though nothing is singular.
inline double min_z_gap(const qpr::Family<double>& f) {
  const auto lw = qpr::lattice(f);
  double gap = 1.0;
  for (std::size_t s = 0; s < lw.z.size(); ++s)
    for (std::size_t t = s + 1; t < lw.z.size(); ++t)
      gap = std::min(gap, std::abs(lw.z[s] - lw.z[t]) / std::max(lw.z[s], lw.z[t]));
  return gap;
}

/// a, c in [0.2, 0.95], q in [0.3, 0.8], accepted when both positivity
/// verdicts hold and the two strands stay apart.
inline qpr::Family<double> sample_family(Sampler& rng, int N, double alpha) {
  for (;;) {
    qpr::Family<double> f{rng.uniform(0.2, 0.95), rng.uniform(0.2, 0.95), alpha,
                          rng.uniform(0.3, 0.8), N};
    if (qpr::positivity_check(f).ok() && min_z_gap(f) > 0.02)
      return f;
  }
}

inline qpk::Family<double> sample_qpk_family(Sampler& rng, int N, double alpha) {
  for (;;) {
    const double q = rng.uniform(0.3, 0.8);
    qpk::Family<double> f{rng.uniform(1.05, 1.0 / q - 0.05), alpha, q, N};
    if (qpk::tridiagonal(f).positive)
      return f;
  }
}

inline std::complex<double> unit_circle(Sampler& rng) {
  return std::polar(1.0, rng.uniform(0.05, 3.09));
}

template <class T> T convert(double v) { return T(v); }

template <class T> qpr::Family<T> convert_family(const qpr::Family<double>& f) {
  return {T(f.a), T(f.c), T(f.alpha), T(f.q), f.N};
}

/// b = a^{-1} q^{-j + alpha t}, d = c^{-1} q^{-j + shift + (1 - alpha) t}
/// substituted into the raw recurrence coefficients at small finite t.
template <class T> TridiagonalSystem<T> aw_oracle(const qpr::Family<T>& f, const T& t) {
  using std::pow;
  const int j = f.j();
  aw::Params<T> p{f.a, pow(f.q, T(-j) + f.alpha * t) / f.a, f.c,
                  pow(f.q, T(-j + f.shift()) + (T(1) - f.alpha) * t) / f.c, f.q};
  TridiagonalSystem<T> sys;
  sys.b.resize(f.N + 1);
  sys.u.assign(f.N + 1, T(0));
  const T base = f.a + T(1) / f.a;
  for (int n = 0; n <= f.N; ++n) {
    const auto co = aw::recurrence_coeffs(p, n);
    sys.b[n] = (base - co.A - co.C) / T(2);
    if (n > 0)
      sys.u[n] = aw::recurrence_coeffs(p, n - 1).A * co.C / T(4);
  }
  return sys;
}

template <class T> T rel(const T& x, const T& y) {
  using std::abs;
  const T s = std::max<T>(abs(x), abs(y));
  return s == T(0) ? T(0) : abs(x - y) / s;
}

} // namespace qortho::support
