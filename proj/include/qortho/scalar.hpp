#pragma once

// Working-precision scalars. Everything numeric in the library is a template
// over a real type T (double or Extended) and, for evaluation points, a value
// type V that is either T or std::complex<T>.

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <string_view>
#include <type_traits>

namespace qortho {

namespace bmp = boost::multiprecision;

/// Arbitrary precision real; digits are a process-wide setting.
using Extended = bmp::number<bmp::mpfr_float_backend<0>, bmp::et_off>;

inline constexpr unsigned kDefaultExtendedDigits = 50;

// The mpfr default precision is global state in this Boost version: set it
// once before any Extended values are created on worker threads.
void set_extended_digits(unsigned digits);
unsigned extended_digits();

class ExtendedDigitsScope {
public:
  explicit ExtendedDigitsScope(unsigned digits) : saved_(extended_digits()) {
    set_extended_digits(digits);
  }
  ~ExtendedDigitsScope() { set_extended_digits(saved_); }
  ExtendedDigitsScope(const ExtendedDigitsScope&) = delete;
  ExtendedDigitsScope& operator=(const ExtendedDigitsScope&) = delete;

private:
  unsigned saved_;
};

enum class PrecisionMode { Double, Extended };

struct Precision {
  PrecisionMode mode = PrecisionMode::Double;
  unsigned digits = kDefaultExtendedDigits;

  /// Accepts "double", "extended" or "extended:P".
  static Precision parse(std::string_view text);
  std::string to_string() const;
};

template <class V> struct is_complex : std::false_type {};
template <class T> struct is_complex<std::complex<T>> : std::true_type {};
template <class V> inline constexpr bool is_complex_v = is_complex<V>::value;

template <class V> struct real_of { using type = V; };
template <class T> struct real_of<std::complex<T>> { using type = T; };
template <class V> using real_of_t = typename real_of<V>::type;

template <class T> T epsilon() { return std::numeric_limits<T>::epsilon(); }

template <class V> real_of_t<V> magnitude(const V& v) {
  using std::abs;
  return abs(v);
}

/// Integer power by repeated squaring.
template <class T> T ipow(const T& base, int n) {
  if (n < 0)
    return T(1) / ipow(base, -n);
  T result(1);
  T b = base;
  while (n > 0) {
    if (n & 1)
      result *= b;
    b *= b;
    n >>= 1;
  }
  return result;
}

/// Parse a decimal literal at full working precision.
template <class T> T parse_real(const std::string& text) {
  if constexpr (std::is_same_v<T, double>)
    return std::stod(text);
  else
    return T(text);
}

template <class T> double to_double(const T& v) {
  if constexpr (std::is_floating_point_v<T>)
    return static_cast<double>(v);
  else
    return v.template convert_to<double>();
}

/// True when |value| is at roundoff level relative to `scale`.
template <class V>
bool near_zero(const V& value, const real_of_t<V>& scale, int ulps = 64) {
  using T = real_of_t<V>;
  using std::abs;
  T s = abs(scale) > T(1) ? T(abs(scale)) : T(1);
  return abs(value) <= T(ulps) * epsilon<T>() * s;
}

/// Neumaier compensated accumulator.
template <class V> class CompensatedSum {
public:
  void add(const V& term) {
    using std::abs;
    V t = sum_ + term;
    if constexpr (is_complex_v<V>) {
      comp_ += V(two_sum_err(sum_.real(), term.real(), t.real()),
                 two_sum_err(sum_.imag(), term.imag(), t.imag()));
    } else {
      comp_ += two_sum_err(sum_, term, t);
    }
    sum_ = t;
  }
  V value() const { return sum_ + comp_; }

private:
  template <class T> static T two_sum_err(const T& a, const T& b, const T& s) {
    using std::abs;
    return abs(a) >= abs(b) ? (a - s) + b : (b - s) + a;
  }
  V sum_{0};
  V comp_{0};
};

/// x = (z + 1/z) / 2.
template <class V> V x_from_z(const V& z) { return (z + V(1) / z) / V(2); }

/// Principal-branch inverse z = x + sqrt(x^2 - 1); complex when |x| < 1.
template <class T> std::complex<T> z_from_x(const T& x) {
  using std::sqrt;
  std::complex<T> xc(x, T(0));
  return xc + sqrt(xc * xc - std::complex<T>(T(1), T(0)));
}

} // namespace qortho
