#include "support.hpp"

#include <gtest/gtest.h>

using namespace qortho;
using support::Sampler;

TEST(QRacah, LowDegrees) {
  const auto p = connections::qracah_params_for(0.8, 0.49, 5);
  EXPECT_EQ(connections::qracah_monic_eval(p, 0, 1.3), 1.0);
  const auto c0 = connections::qracah_coefficients(p, 0);
  const double diag = 1 + p.p_gamma * p.p_delta * p.q - c0.A - c0.C;
  EXPECT_DOUBLE_EQ(connections::qracah_monic_eval(p, 1, 1.3), 1.3 - diag);
}

TEST(QRacahIdentity, DegreeZeroExact) {
  const auto params = connections::qracah_params_for(0.7, 0.5, 3);
  EXPECT_EQ(connections::qracah_monic_eval(params, 0, 1.4), 1.0);
  EXPECT_EQ(qpr::tridiagonal(connections::single_lattice_family(0.7, 0.5, 3)).eval(0, 1.4), 1.0);
}

TEST(QRacahIdentity, RejectsEmptyFamily) {
  EXPECT_THROW(connections::verify_qracah_identity(0.7, 0.5, 0, 1.4), ArgumentError);
}

TEST(QRacahIdentity, ExampleFamily) {
  Sampler rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const auto z = support::unit_circle(rng);
    const auto r = connections::verify_qracah_identity(0.8, 0.49, 5, z);
    EXPECT_LE(r.residual, 1e-8 * r.scale);
  }
}

TEST(QRacahIdentity, BothParitiesAcrossAGrid) {
  Sampler rng(42);
  for (int N = 1; N <= 8; ++N)
    for (double a : {0.5, 0.7, 0.9})
      for (int trial = 0; trial < 10; ++trial) {
        const double q = 0.5;
        const auto r = connections::verify_qracah_identity(a, q, N, support::unit_circle(rng));
        EXPECT_LE(r.residual, 1e-8 * r.scale) << "N=" << N << " a=" << a;
      }
}

TEST(QRacahIdentity, SingleLatticeCollapse) {
  const double a = 0.7, q = 0.45;
  const auto lw = qpr::lattice(connections::single_lattice_family(a, q, 6));
  for (std::size_t s = 0; s < lw.x.size(); ++s) {
    const double h = std::pow(q, s / 2.0);
    EXPECT_NEAR(lw.x[s], (1 / (a * h) + a * h) / 2, 1e-14);
  }
}

TEST(Neville, ExactForPolynomials) {
  const std::vector<double> h = {0.5, 0.25, 0.125, 0.0625};
  std::vector<double> v;
  for (double x : h)
    v.push_back(3 - 2 * x + 5 * x * x);
  EXPECT_NEAR(connections::neville_diagonal(h, v).back(), 3.0, 1e-13);
}

TEST(DualHahn, TrivialTargets) {
  ExtendedDigitsScope digits(50);
  const auto r0 = connections::dual_hahn_limit(Extended("0.6"), 4, 0);
  EXPECT_EQ(r0.targetC, Extended(0));
  const auto r4 = connections::dual_hahn_limit(Extended("0.6"), 4, 4);
  EXPECT_EQ(r4.targetA, Extended(0));
}

TEST(DualHahn, ExtrapolationMatchesTargets) {
  ExtendedDigitsScope digits(50);
  for (const char* ae : {"0.4", "0.6"})
    for (int n = 0; n <= 4; ++n) {
      const auto r = connections::dual_hahn_limit(Extended(ae), 4, n);
      EXPECT_LT(abs(r.limA - r.targetA), Extended("1e-4") * std::max<Extended>(Extended(1), abs(r.targetA)));
      EXPECT_LT(abs(r.limC - r.targetC), Extended("1e-4") * std::max<Extended>(Extended(1), abs(r.targetC)));
    }
}

TEST(DualHahn, RawSamplesConvergeAtFirstOrder) {
  // A_n / (1 - q^{1/2})^2 without extrapolation: the error halves with eps
  ExtendedDigitsScope digits(50);
  const int N = 4, n = 1;
  const Extended ae("0.6");
  const auto target = connections::dual_hahn_limit(ae, N, n).targetA;
  std::vector<Extended> err;
  for (int k = 10; k <= 12; ++k) {
    const Extended eps = ipow(Extended(2), -k), root = Extended(1) - eps, q = root * root;
    const Extended a = pow(q, ae);
    const qpr::Family<Extended> f{a, a * root, Extended("0.5"), q, N};
    err.push_back(abs(qpr::limiting_aw_coefficients(f, n).A / (eps * eps) - target));
  }
  EXPECT_NEAR(to_double(err[0] / err[1]), 2.0, 0.1);
  EXPECT_NEAR(to_double(err[1] / err[2]), 2.0, 0.1);
}
