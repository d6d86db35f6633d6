#pragma once

// q-Pochhammer symbols, the Phi_k basis and terminating basic hypergeometric
// sums.

#include "qortho/errors.hpp"
#include "qortho/scalar.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qortho {

namespace detail {

template <class T> void require_nome(const T& q) {
  if (!(q > T(0) && q < T(1)))
    throw ArgumentError("nome q must lie in (0,1)");
}

inline void require_length(int k) {
  if (k < 0)
    throw ArgumentError("q-Pochhammer length must be non-negative, got " + std::to_string(k));
}

} // namespace detail

/// (a;q)_k = prod_{i<k} (1 - a q^i).
template <class V, class T> V qpochhammer(const V& a, const T& q, int k) {
  detail::require_nome(q);
  detail::require_length(k);
  V result(1);
  T qi(1);
  for (int i = 0; i < k; ++i) {
    result *= V(1) - a * qi;
    qi *= q;
  }
  return result;
}

/// (a_1, ..., a_m; q)_k.
template <class V, class T>
V qpochhammer_multi(std::span<const V> bases, const T& q, int k) {
  detail::require_nome(q);
  detail::require_length(k);
  V result(1);
  for (const V& a : bases)
    result *= qpochhammer(a, q, k);
  return result;
}

template <class V, class T>
V qpochhammer_multi(std::initializer_list<V> bases, const T& q, int k) {
  return qpochhammer_multi(std::span<const V>(bases.begin(), bases.size()), q, k);
}

/// Phi_k(x) = (a z, a/z; q)_k with x = (z + 1/z)/2.
template <class T, class V> V phi_basis(const T& a, const V& z, const T& q, int k) {
  if (z == V(0))
    throw ArgumentError("phi_basis: z must be non-zero");
  return qpochhammer(V(a) * z, q, k) * qpochhammer(V(a) / z, q, k);
}

template <class V> struct SeriesSpec {
  using Real = real_of_t<V>;
  std::vector<V> numerator;
  std::vector<V> denominator;
  Real q;
  V argument;
  std::optional<int> degree;
};

namespace detail {

/// n >= 0 with p == q^{-n}, if any.
template <class V> std::optional<int> terminating_index(const V& p, const real_of_t<V>& q) {
  using T = real_of_t<V>;
  using std::abs;
  using std::log;
  using std::round;
  T re;
  if constexpr (is_complex_v<V>) {
    if (abs(p.imag()) > T(64) * epsilon<T>() * abs(p))
      return std::nullopt;
    re = p.real();
  } else {
    re = p;
  }
  if (!(re >= T(1)))
    return std::nullopt;
  T n = round(-log(re) / log(q));
  if (n < T(0) || n > T(100000))
    return std::nullopt;
  int ni = static_cast<int>(to_double(n));
  T check = re * ipow(q, ni) - T(1);
  if (abs(check) > T(1e4) * epsilon<T>())
    return std::nullopt;
  return ni;
}

} // namespace detail

/// Smallest n with some numerator parameter equal to q^{-n}; falls back to the
/// explicit degree.
template <class V> int resolve_degree(const SeriesSpec<V>& spec) {
  std::optional<int> best;
  for (const V& p : spec.numerator)
    if (auto n = detail::terminating_index(p, spec.q))
      best = best ? std::min(*best, *n) : *n;
  if (spec.degree) {
    if (*spec.degree < 0)
      throw ArgumentError("series truncation degree must be non-negative");
    return best ? std::min(*best, *spec.degree) : *spec.degree;
  }
  if (!best)
    throw ArgumentError("series is not terminating and no truncation degree was supplied");
  return *best;
}

/// sum_k prod (num;q)_k / prod (den;q)_k * arg^k over k = 0..degree.
/// (q;q)_k is only included if the caller lists q among the denominators.
template <class V> V terminating_series_eval(const SeriesSpec<V>& spec) {
  using T = real_of_t<V>;
  detail::require_nome(spec.q);
  const int degree = resolve_degree(spec);
  CompensatedSum<V> sum;
  V term(1);
  sum.add(term);
  T qk(1);
  for (int k = 1; k <= degree; ++k) {
    V num(1), den(1);
    for (const V& p : spec.numerator)
      num *= V(1) - p * qk;
    for (std::size_t i = 0; i < spec.denominator.size(); ++i) {
      const V& p = spec.denominator[i];
      V factor = V(1) - p * qk;
      if (near_zero(factor, magnitude(p * qk)))
        throw SingularityError("terminating series: denominator parameter #" + std::to_string(i) +
                                   " gives a vanishing q-Pochhammer factor",
                               k);
      den *= factor;
    }
    term = term * num / den * spec.argument;
    sum.add(term);
    qk *= spec.q;
  }
  return sum.value();
}

} // namespace qortho
