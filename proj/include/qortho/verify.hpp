#pragma once

// Verification suites shared by the command line tool and the acceptance
// runner. Each suite returns one Check per measured property.

#include "qortho/batch.hpp"
#include "qortho/connections.hpp"
#include "qortho/qpara_krawtchouk.hpp"
#include "qortho/qpara_racah.hpp"
#include "qortho/spectral.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace qortho::verify {

enum class Kind { QPR, QPK };

enum class Status { Pass, Fail, ExpectedViolation, Skipped };

inline const char* to_string(Status s) {
  switch (s) {
  case Status::Pass: return "pass";
  case Status::Fail: return "fail";
  case Status::ExpectedViolation: return "expected-violation";
  case Status::Skipped: return "skipped";
  }
  return "?";
}

struct Check {
  std::string suite;
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  Status status = Status::Pass;

  bool ok() const { return status != Status::Fail; }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"orthogonality", "bispectral", "persymmetry",
                                                 "explicit",      "isospectral", "qracah",
                                                 "dualhahn",      "qpk-limit"};
  return names;
}

inline bool known_suite(const std::string& s) {
  if (s == "all")
    return true;
  for (const auto& n : suite_names())
    if (n == s)
      return true;
  return false;
}

template <class T> struct Spec {
  Kind kind = Kind::QPR;
  T a{0}, c{0}, Delta{0}, alpha{0}, q{0};
  int N = 1;
  T a_exponent{0};
  std::uint64_t seed = 0;

  qpr::Family<T> qpr_family() const { return {a, c, alpha, q, N}; }
  qpk::Family<T> qpk_family() const { return {Delta, alpha, q, N}; }
};

/// Uniform doubles from a fixed 64-bit engine; the mapping does not depend on
/// the standard library's distribution implementation.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

private:
  std::mt19937_64 engine_;
};

/// Negative real z keeps x <= -1, away from every zero of a positive family.
template <class T> std::vector<T> sample_points(Sampler& rng, int count, const T& q) {
  std::vector<T> z;
  while (static_cast<int>(z.size()) < count) {
    const T v(-rng.uniform(0.3, 3.0));
    const T v2 = v * v;
    using std::abs;
    if (abs(v2 - T(1)) < T(1e-3) || abs(q * v2 - T(1)) < T(1e-3))
      continue;
    z.push_back(v);
  }
  return z;
}

namespace detail {

inline Check make_check(const std::string& suite, const std::string& name, double residual,
                        double tol) {
  return {suite, name, residual, tol, residual <= tol ? Status::Pass : Status::Fail};
}

template <class T> T rel_diff(const T& x, const T& y) {
  using std::abs;
  const T s = std::max<T>(abs(x), abs(y));
  return s == T(0) ? T(0) : abs(x - y) / s;
}

template <class T> T max_gram_error(const TridiagonalSystem<T>& sys, const LatticeWeights<T>& lw) {
  const auto table = batch::serial::evaluate_table<T>(sys, lw.x, sys.b.size());
  const auto gram = batch::serial::gram_matrix<T>(table, lw.w);
  const auto e = batch::gram_error<T>(gram, lw.h);
  return std::max(e.off_diagonal, e.diagonal);
}

template <class T> T christoffel_error(const qpr::Family<T>& f, const LatticeWeights<T>& lw) {
  const auto cw = qpr::weights_from_christoffel(f);
  T err(0);
  for (std::size_t s = 0; s < lw.w.size(); ++s)
    err = std::max(err, rel_diff(lw.w[s], cw.w[s]));
  return err;
}

} // namespace detail

/// Spectrum of the Jacobi matrix against the sorted lattice; double only.
inline double spectrum_vs_grid(const TridiagonalSystem<double>& sys, std::vector<double> grid) {
  const auto m = spectral::build_jacobi(sys);
  std::sort(grid.begin(), grid.end());
  return spectral::sorted_distance(spectral::spectrum(m), grid) / m.norm();
}

template <class T> std::vector<Check> orthogonality(const Spec<T>& spec) {
  const std::string suite = "orthogonality";
  std::vector<Check> out;
  LatticeWeights<T> lw;
  TridiagonalSystem<T> sys;
  if (spec.kind == Kind::QPR) {
    const auto f = spec.qpr_family();
    lw = qpr::weights(f);
    sys = qpr::tridiagonal(f);
  } else {
    const auto f = spec.qpk_family();
    lw = qpk::weights(f);
    sys = qpk::tridiagonal(f);
  }
  using std::abs;
  out.push_back(detail::make_check(suite, "sum_even = 1 - alpha",
                                   to_double(abs(lw.sum_even() - (T(1) - spec.alpha))), 1e-9));
  out.push_back(detail::make_check(suite, "sum_odd = alpha",
                                   to_double(abs(lw.sum_odd() - spec.alpha)), 1e-9));
  out.push_back(detail::make_check(suite, "gram", to_double(detail::max_gram_error(sys, lw)), 1e-8));
  if (spec.kind == Kind::QPR)
    out.push_back(detail::make_check(suite, "christoffel weights",
                                     to_double(detail::christoffel_error(spec.qpr_family(), lw)),
                                     1e-7));
  return out;
}

template <class T> std::vector<Check> bispectral(const Spec<T>& spec) {
  const std::string suite = "bispectral";
  std::vector<Check> out;
  T lam_err(0);
  for (int n = 0; n <= spec.N; ++n)
    lam_err = std::max(lam_err, detail::rel_diff(qpr::qdiff_eigenvalue(spec.q, n, spec.N),
                                                 qpr::qdiff_eigenvalue(spec.q, spec.N - n, spec.N)));
  out.push_back(detail::make_check(suite, "lambda_n = lambda_{N-n}", to_double(lam_err), 1e-14));
  if (spec.kind != Kind::QPR) {
    out.push_back({suite, "q-difference residual", 0.0, 1e-9, Status::Skipped});
    return out;
  }
  const auto f = spec.qpr_family();
  const auto sys = qpr::tridiagonal(f);
  Sampler rng(spec.seed);
  const auto zs = sample_points<T>(rng, 10, spec.q);
  T worst(0);
  using std::abs;
  for (int n = 0; n <= spec.N; ++n)
    for (const T& z : zs) {
      const auto r = qpr::qdiff_residual(f, sys, n, z);
      worst = std::max<T>(worst, abs(r.residual) / std::max<T>(r.scale, T(1e-300)));
    }
  out.push_back(detail::make_check(suite, "q-difference residual / scale", to_double(worst), 1e-9));
  return out;
}

template <class T> std::vector<Check> persymmetry(const Spec<T>& spec) {
  const std::string suite = "persymmetry";
  std::vector<Check> out;
  auto system_for = [&](const T& alpha) {
    Spec<T> s = spec;
    s.alpha = alpha;
    return spec.kind == Kind::QPR ? qpr::tridiagonal(s.qpr_family())
                                  : qpk::tridiagonal(s.qpk_family());
  };
  const T half = T(1) / T(2);
  const double at_half = to_double(system_for(half).persymmetry_residual());
  out.push_back(detail::make_check(suite, "residual at alpha = 1/2", at_half, 1e-12));
  if (spec.alpha != half) {
    // away from 1/2 the suite asserts the violation
    const double r = to_double(system_for(spec.alpha).persymmetry_residual());
    out.push_back({suite, "residual at alpha (violation expected)", r, 1e-6,
                   r > 1e-6 ? Status::ExpectedViolation : Status::Fail});
  }
  return out;
}

template <class T> std::vector<Check> explicit_expressions(const Spec<T>& spec) {
  const std::string suite = "explicit";
  if (spec.kind != Kind::QPR)
    return {{suite, "explicit vs recurrence", 0.0, 1e-8, Status::Skipped}};
  const auto f = spec.qpr_family();
  const auto sys = qpr::tridiagonal(f);
  Sampler rng(spec.seed);
  const auto zs = sample_points<T>(rng, 20, spec.q);
  T worst(0);
  for (int n = 0; n <= spec.N; ++n)
    for (const T& z : zs)
      worst = std::max(worst, detail::rel_diff(qpr::eval_explicit(f, n, z),
                                               qpr::eval_recurrence(sys, n, z)));
  return {detail::make_check(suite, "explicit vs recurrence (relative)", to_double(worst), 1e-8)};
}

namespace detail {

template <class T>
std::vector<Check> isospectral_checks(const Spec<T>& spec, const std::vector<double>& alphas) {
  const std::string suite = "isospectral";
  std::vector<Check> out;
  if (spec.kind == Kind::QPR) {
    const qpr::Family<double> f{to_double(spec.a), to_double(spec.c), 0.5, to_double(spec.q), spec.N};
    const auto r = spectral::isospectrality_check(f, alphas);
    out.push_back(make_check(suite, "spectrum(alpha) vs spectrum(1/2) / norm",
                             r.max_deviation / r.norm, 1e-9));
    out.push_back(make_check(suite, "spectrum vs lattice / norm", r.lattice_deviation / r.norm,
                             1e-9));
    return out;
  }
  double worst = 0.0;
  for (double alpha : alphas) {
    const qpk::Family<double> f{to_double(spec.Delta), alpha, to_double(spec.q), spec.N};
    worst = std::max(worst, spectrum_vs_grid(qpk::tridiagonal(f), qpk::lattice(f).x));
  }
  out.push_back(make_check(suite, "spectrum vs lattice / norm", worst, 1e-9));
  return out;
}

} // namespace detail

template <class T> std::vector<Check> isospectral(const Spec<T>& spec) {
  const std::vector<double> alphas = {0.1, 0.3, 0.5, 0.7, 0.9};
  try {
    return detail::isospectral_checks(spec, alphas);
  } catch (const ArgumentError& e) {
    // a non-symmetrizable Jacobi matrix is a failed check, not a usage error
    return {{"isospectral", std::string("Jacobi matrix: ") + e.what(), 0.0, 1e-9, Status::Fail}};
  }
}

template <class T> std::vector<Check> qracah(const Spec<T>& spec) {
  const std::string suite = "qracah";
  if (spec.kind != Kind::QPR)
    return {{suite, "q-Racah identity", 0.0, 1e-8, Status::Skipped}};
  Sampler rng(spec.seed);
  const auto zs = sample_points<T>(rng, 10, spec.q);
  T worst(0);
  for (const T& z : zs) {
    const auto r = connections::verify_qracah_identity(spec.a, spec.q, spec.N, z);
    worst = std::max<T>(worst, r.residual / std::max<T>(r.scale, T(1e-300)));
  }
  return {detail::make_check(suite, "q-Racah identity residual / scale", to_double(worst), 1e-8)};
}

/// Always runs at extended precision: the q -> 1 path divides by (1 - q^{1/2})^2.
inline std::vector<Check> dual_hahn(double a_exponent, int N) {
  const std::string suite = "dualhahn";
  ExtendedDigitsScope digits(std::max(extended_digits(), kDefaultExtendedDigits));
  std::vector<Check> out;
  const Extended ae(a_exponent);
  for (int n = 0; n <= N; ++n) {
    const auto r = connections::dual_hahn_limit(ae, N, n);
    using std::abs;
    auto err = [](const Extended& est, const Extended& target) {
      return to_double(abs(est - target) / std::max(Extended(1), Extended(abs(target))));
    };
    out.push_back(detail::make_check(suite, "A_" + std::to_string(n), err(r.limA, r.targetA), 1e-4));
    out.push_back(detail::make_check(suite, "C_" + std::to_string(n), err(r.limC, r.targetC), 1e-4));
  }
  return out;
}

template <class T> struct ThetaLimit {
  std::vector<T> b, u; ///< extrapolated scaled q-para-Racah coefficients
  std::vector<T> y;    ///< extrapolated scaled lattice
};

/// (2a/theta) b_n, (4a^2/theta^2) u_n and (2a/theta) x_s of the q-para-Racah
/// family with a = sqrt(theta Delta), c = sqrt(theta / Delta), extrapolated
/// to theta -> oo from three decades. The decades start above q^{1-N} so the
/// expansion in 1/theta is already in its asymptotic regime.
template <class T>
ThetaLimit<T> theta_limit(const T& Delta, const T& alpha, const T& q, int N) {
  using std::sqrt;
  const T base = std::max(T(1), ipow(q, 1 - N));
  std::vector<T> h;
  std::vector<std::vector<T>> bs(N + 1), us(N + 1), ys(N + 1);
  for (int k = 3; k <= 5; ++k) {
    const T theta = base * ipow(T(10), k);
    const T a = sqrt(theta * Delta);
    const T c = sqrt(theta / Delta);
    const qpr::Family<T> f{a, c, alpha, q, N};
    const auto sys = qpr::tridiagonal(f);
    const auto lat = qpr::lattice(f);
    const T sb = T(2) * a / theta;
    h.push_back(T(1) / theta);
    for (int n = 0; n <= N; ++n) {
      bs[n].push_back(sb * sys.b[n]);
      us[n].push_back(sb * sb * sys.u[n]);
      ys[n].push_back(sb * lat.x[n]);
    }
  }
  ThetaLimit<T> out;
  for (int n = 0; n <= N; ++n) {
    out.b.push_back(connections::neville_diagonal(h, bs[n]).back());
    out.u.push_back(connections::neville_diagonal(h, us[n]).back());
    out.y.push_back(connections::neville_diagonal(h, ys[n]).back());
  }
  return out;
}

template <class T> std::vector<Check> qpk_limit(const Spec<T>& spec) {
  const std::string suite = "qpk-limit";
  ExtendedDigitsScope digits(std::max(extended_digits(), kDefaultExtendedDigits));
  auto ext = [](const T& v) {
    if constexpr (std::is_same_v<T, Extended>)
      return v;
    else
      return Extended(v);
  };
  const Extended Delta = spec.kind == Kind::QPK ? ext(spec.Delta) : ext(spec.a) / ext(spec.c);
  const qpk::Family<Extended> f{Delta, ext(spec.alpha), ext(spec.q), spec.N};
  const auto sys = qpk::tridiagonal(f);
  const auto lat = qpk::lattice(f);
  const auto lim = theta_limit(f.Delta, f.alpha, f.q, f.N);
  Extended eb(0), eu(0), ey(0);
  for (int n = 0; n <= f.N; ++n) {
    eb = std::max(eb, detail::rel_diff(sys.b[n], lim.b[n]));
    ey = std::max(ey, detail::rel_diff(lat.x[n], lim.y[n]));
    if (n > 0)
      eu = std::max(eu, detail::rel_diff(sys.u[n], lim.u[n]));
  }
  return {detail::make_check(suite, "b vs theta limit (relative)", to_double(eb), 1e-6),
          detail::make_check(suite, "u vs theta limit (relative)", to_double(eu), 1e-6),
          detail::make_check(suite, "lattice vs theta limit (relative)", to_double(ey), 1e-6)};
}

template <class T> std::vector<Check> run_suite(const std::string& suite, const Spec<T>& spec) {
  if (suite == "orthogonality") return orthogonality(spec);
  if (suite == "bispectral") return bispectral(spec);
  if (suite == "persymmetry") return persymmetry(spec);
  if (suite == "explicit") return explicit_expressions(spec);
  if (suite == "isospectral") return isospectral(spec);
  if (suite == "qracah") return qracah(spec);
  if (suite == "dualhahn") return dual_hahn(to_double(spec.a_exponent), spec.N);
  if (suite == "qpk-limit") return qpk_limit(spec);
  if (suite == "all") {
    std::vector<Check> all;
    for (const auto& name : suite_names()) {
      auto part = run_suite(name, spec);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  throw ArgumentError("unknown suite '" + suite + "'");
}

} // namespace qortho::verify
