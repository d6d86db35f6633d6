#include "support.hpp"

#include <gtest/gtest.h>

using namespace qortho;
using support::Sampler;

namespace {

const qpr::Family<double> kOdd{0.9, 0.7, 0.5, 0.5, 3};
const qpr::Family<double> kEven{0.9, 0.7, 0.3, 0.5, 4};

qpr::Family<double> with_alpha(qpr::Family<double> f, double alpha) {
  f.alpha = alpha;
  return f;
}

} // namespace

TEST(QPRCoefficients, DegenerateOddFamilyCutsTheChain) {
  const qpr::Family<double> f{0.6, 0.6, 0.4, 0.5, 5};
  EXPECT_EQ(qpr::off_diagonal(f, f.j() + 1), 0.0);
}

TEST(QPRCoefficients, MiddleDiagonalEntriesCoincideAtHalf) {
  for (int N : {1, 3, 5, 7, 9}) {
    const qpr::Family<double> f{0.85, 0.6, 0.5, 0.45, N};
    EXPECT_NEAR(qpr::diagonal(f, f.j()), qpr::diagonal(f, f.j() + 1), 1e-14) << "N=" << N;
    EXPECT_GT(std::abs(qpr::diagonal(with_alpha(f, 0.3), f.j()) -
                       qpr::diagonal(with_alpha(f, 0.3), f.j() + 1)),
              1e-6);
  }
}

TEST(QPRCoefficients, SubdiagonalFromLimitingAskeyWilson) {
  // u_2 = A_1 C_2 / 4 for N = 3
  const auto A1 = qpr::limiting_aw_coefficients(kOdd, 1);
  const auto C2 = qpr::limiting_aw_coefficients(kOdd, 2);
  EXPECT_NEAR(qpr::off_diagonal(kOdd, 2), A1.A * C2.C / 4, 1e-15);
}

TEST(QPRCoefficients, LimitingCoefficientsReproduceClosedForms) {
  Sampler rng(12);
  for (int N = 1; N <= 9; ++N)
    for (double alpha : {0.25, 0.5, 0.75}) {
      const auto f = support::sample_family(rng, N, alpha);
      const double base = (f.a + 1 / f.a) / 2;
      for (int n = 0; n <= N; ++n) {
        const auto co = qpr::limiting_aw_coefficients(f, n);
        EXPECT_NEAR(qpr::diagonal(f, n), base - (co.A + co.C) / 2,
                    1e-11 * std::max(1.0, std::abs(base)));
        if (n > 0) {
          const double u = qpr::limiting_aw_coefficients(f, n - 1).A * co.C / 4;
          EXPECT_NEAR(qpr::off_diagonal(f, n), u, 1e-11 * std::abs(u)) << "N=" << N << " n=" << n;
        }
      }
    }
}

TEST(QPRCoefficients, OracleSubstitutionAtSmallT) {
  // the example family, both parities, against t = 1e-30 at 100 digits
  ExtendedDigitsScope digits(100);
  for (const auto& fd : {kOdd, kEven, qpr::Family<double>{0.8, 0.55, 0.35, 0.6, 7}}) {
    const auto f = support::convert_family<Extended>(fd);
    const auto oracle = support::aw_oracle(f, Extended("1e-30"));
    const auto sys = qpr::tridiagonal(f);
    for (int n = 0; n <= f.N; ++n) {
      EXPECT_LT(support::rel(sys.b[n], oracle.b[n]), Extended("1e-25")) << "b_" << n;
      if (n > 0)
        EXPECT_LT(support::rel(sys.u[n], oracle.u[n]), Extended("1e-25")) << "u_" << n;
    }
  }
}

TEST(QPRCoefficients, OracleErrorIsLinearInT) {
  // the substitution converges at first order: shrinking t by 10^5 shrinks
  // the error by the same factor
  ExtendedDigitsScope digits(100);
  const auto f = support::convert_family<Extended>(kOdd);
  const auto sys = qpr::tridiagonal(f);
  const int n = f.j() + 1;
  const Extended e1 = support::rel(sys.u[n], support::aw_oracle(f, Extended("1e-20")).u[n]);
  const Extended e2 = support::rel(sys.u[n], support::aw_oracle(f, Extended("1e-25")).u[n]);
  const double ratio = to_double(e1 / e2);
  EXPECT_GT(ratio, 0.5e5);
  EXPECT_LT(ratio, 2e5);
}

TEST(QPRCoefficients, IndexRange) {
  EXPECT_THROW(qpr::diagonal(kOdd, -1), ArgumentError);
  EXPECT_THROW(qpr::diagonal(kOdd, 4), ArgumentError);
  EXPECT_THROW(qpr::off_diagonal(kOdd, 0), ArgumentError);
  EXPECT_NO_THROW(qpr::off_diagonal(kOdd, 4));
}

TEST(QPRCoefficients, TruncationAtNPlusOne) {
  for (int N = 1; N <= 9; ++N) {
    const qpr::Family<double> f{0.9, 0.7, 0.3, 0.5, N};
    EXPECT_EQ(qpr::off_diagonal(f, N + 1), 0.0) << "N=" << N;
  }
}

TEST(QPRTridiagonal, PersymmetricAtHalf) {
  Sampler rng(13);
  for (int N = 1; N <= 9; ++N) {
    const auto f = support::sample_family(rng, N, 0.5);
    EXPECT_LE(qpr::tridiagonal(f).persymmetry_residual(), 1e-12) << "N=" << N;
    EXPECT_GT(qpr::tridiagonal(with_alpha(f, 0.3)).persymmetry_residual(), 1e-6);
  }
}

TEST(QPRTridiagonal, PositiveInsideTheRegion) {
  Sampler rng(14);
  for (int N = 1; N <= 9; ++N)
    for (double alpha : {0.1, 0.5, 0.9}) {
      const auto sys = qpr::tridiagonal(support::sample_family(rng, N, alpha));
      EXPECT_TRUE(sys.positive);
    }
}

TEST(QPRTridiagonal, BoundaryRatioKillsASubdiagonalEntry) {
  // a/c = q: the factor (a q^n - c q^{j+1}) vanishes at n = j
  const double q = 0.5, c = 0.8;
  const qpr::Family<double> f{q * c, c, 0.4, q, 5};
  const auto sys = qpr::tridiagonal(f);
  EXPECT_FALSE(sys.positive);
  double smallest = 1.0;
  for (int n = 1; n <= f.N; ++n)
    smallest = std::min(smallest, std::abs(sys.u[n]));
  EXPECT_LT(smallest, 1e-15);
}

TEST(QPRRecurrence, LowDegrees) {
  const auto sys = qpr::tridiagonal(kOdd);
  const double z = 1.6, x = (z + 1 / z) / 2;
  EXPECT_EQ(qpr::eval_recurrence(sys, 0, z), 1.0);
  EXPECT_DOUBLE_EQ(qpr::eval_recurrence(sys, 1, z), x - sys.b[0]);
}

TEST(QPRRecurrence, CharacteristicPolynomialVanishesOnTheLattice) {
  Sampler rng(15);
  for (int N = 1; N <= 9; ++N) {
    const auto f = support::sample_family(rng, N, 0.35);
    const auto sys = qpr::tridiagonal(f);
    const auto lw = qpr::lattice(f);
    for (std::size_t s = 0; s < lw.z.size(); ++s) {
      // scale: the product of the linear factors' magnitudes at this point
      double scale = 1.0;
      for (std::size_t t = 0; t < lw.x.size(); ++t)
        scale *= std::max(1.0, std::abs(lw.x[s]) + std::abs(lw.x[t]));
      EXPECT_LE(std::abs(qpr::eval_recurrence(sys, N + 1, lw.z[s])), 1e-9 * scale);
    }
  }
}

TEST(QPRExplicit, DegreeZero) { EXPECT_EQ(qpr::eval_explicit(kOdd, 0, 1.3), 1.0); }

TEST(QPRExplicit, HighBranchOddFive) {
  const qpr::Family<double> f{0.9, 0.7, 0.3, 0.5, 5};
  ASSERT_EQ(qpr::branch(f, 4), qpr::Branch::High);
  Sampler rng(16);
  for (int trial = 0; trial < 10; ++trial) {
    const auto z = support::unit_circle(rng);
    const auto e = qpr::eval_explicit(f, 4, z);
    const auto r = qpr::eval_recurrence(f, 4, z);
    EXPECT_LE(std::abs(e - r), 1e-9 * std::abs(r));
  }
}

TEST(QPRExplicit, TruncatedSeriesBranch) {
  ASSERT_EQ(qpr::branch(kOdd, 1), qpr::Branch::MidJ);
  for (double z : {-2.0, -0.7, 0.4, 2.5}) {
    const double e = qpr::eval_explicit(kOdd, 1, z);
    const double r = qpr::eval_recurrence(kOdd, 1, z);
    EXPECT_NEAR(e, r, 1e-12 * std::max(1.0, std::abs(r)));
  }
}

TEST(QPRExplicit, EveryBranchMatchesTheRecurrence) {
  Sampler rng(17);
  for (int N = 1; N <= 9; ++N)
    for (double alpha : {0.25, 0.5, 0.75}) {
      const auto f = support::sample_family(rng, N, alpha);
      const auto sys = qpr::tridiagonal(f);
      for (int trial = 0; trial < 20; ++trial) {
        const auto z = support::unit_circle(rng);
        for (int n = 0; n <= N; ++n) {
          const auto e = qpr::eval_explicit(f, n, z);
          const auto r = qpr::eval_recurrence(sys, n, z);
          EXPECT_LE(std::abs(e - r), 1e-8 * std::abs(r))
              << "N=" << N << " n=" << n << " branch=" << qpr::to_string(qpr::branch(f, n));
        }
      }
    }
}

TEST(QPRExplicit, ExtendedPrecisionMatches) {
  ExtendedDigitsScope digits(50);
  const auto f = support::convert_family<Extended>(qpr::Family<double>{0.8, 0.55, 0.35, 0.6, 8});
  const auto sys = qpr::tridiagonal(f);
  const Extended z("-1.37");
  for (int n = 0; n <= f.N; ++n)
    EXPECT_LT(support::rel(qpr::eval_explicit(f, n, z), qpr::eval_recurrence(sys, n, z)),
              Extended("1e-40"));
}

TEST(QPRLattice, Layout) {
  const auto lw = qpr::lattice(kEven);
  ASSERT_EQ(lw.x.size(), 5u);
  EXPECT_DOUBLE_EQ(lw.x[0], (1 / kEven.a + kEven.a) / 2);
  EXPECT_DOUBLE_EQ(lw.z[1], kEven.c);
  EXPECT_DOUBLE_EQ(lw.z[4], kEven.a * kEven.q * kEven.q);
  EXPECT_DOUBLE_EQ(lw.x[3], (1 / (kEven.c * kEven.q) + kEven.c * kEven.q) / 2);
}

TEST(QPRLattice, DegenerateStrandsCoincide) {
  const qpr::Family<double> f{0.6, 0.6, 0.4, 0.5, 5};
  const auto lw = qpr::lattice(f);
  for (int s = 0; s <= f.j(); ++s)
    EXPECT_EQ(lw.x[2 * s], lw.x[2 * s + 1]);
}

TEST(QPRCharPoly, ZerosOnTheLattice) {
  for (const auto& f : {kOdd, kEven}) {
    const auto lw = qpr::lattice(f);
    for (double z : lw.z)
      EXPECT_NEAR(qpr::char_poly(f, z), 0.0, 1e-15);
  }
}

TEST(QPRCharPoly, ProportionalToTheRecurrence) {
  Sampler rng(18);
  for (int N = 1; N <= 9; ++N) {
    const auto f = support::sample_family(rng, N, 0.6);
    const auto sys = qpr::tridiagonal(f);
    const double fitted = qpr::fit_char_poly_scale(f, sys);
    EXPECT_NEAR(fitted, qpr::char_poly_scale(f), 1e-10 * std::abs(fitted));
    for (int trial = 0; trial < 10; ++trial) {
      const double z = -rng.uniform(0.3, 3.0);
      const double ratio = qpr::eval_recurrence(sys, N + 1, z) / qpr::char_poly(f, z);
      EXPECT_NEAR(ratio, fitted, 1e-8 * std::abs(fitted)) << "N=" << N;
    }
  }
}

TEST(QPRCharPoly, DoubleRootsWhenStrandsCoincide) {
  // central difference of the factored form in x at each doubled point
  const qpr::Family<double> f{0.6, 0.6, 0.4, 0.5, 5};
  const auto lw = qpr::lattice(f);
  for (std::size_t s = 0; s < lw.x.size(); ++s) {
    const double x = lw.x[s], h = 1e-4;
    auto F = [&](double xx) { return qpr::char_poly(f, z_from_x(xx)).real(); };
    const double deriv = (F(x + h) - F(x - h)) / (2 * h);
    EXPECT_NEAR(deriv, 0.0, 1e-6);
  }
}

TEST(QPRWeights, SumsGramAndPositivity) {
  Sampler rng(19);
  for (int N = 1; N <= 9; ++N)
    for (double alpha : {0.25, 0.5, 0.75}) {
      const auto f = support::sample_family(rng, N, alpha);
      const auto lw = qpr::weights(f);
      EXPECT_NEAR(lw.sum_even(), 1 - alpha, 1e-9);
      EXPECT_NEAR(lw.sum_odd(), alpha, 1e-9);
      EXPECT_TRUE(lw.all_weights_positive());
      EXPECT_FALSE(lw.signed_measure);
      EXPECT_LE(verify::detail::max_gram_error(qpr::tridiagonal(f), lw), 1e-8)
          << "N=" << N << " alpha=" << alpha;
    }
}

TEST(QPRWeights, BetaFactor) {
  Sampler rng(20);
  for (int N = 1; N <= 9; ++N)
    for (double alpha : {0.25, 0.75}) {
      const auto f = support::sample_family(rng, N, alpha);
      const auto w = qpr::weights(f).w;
      const auto wt = qpr::weights(with_alpha(f, 0.5)).w;
      // w_s / wt_s = k (1 + beta (-1)^s) for one constant k
      const double even = w[0] / wt[0], odd = w[1] / wt[1];
      const double beta = (even - odd) / (even + odd);
      const double k = (even + odd) / 2;
      EXPECT_NEAR(beta, 1 - 2 * alpha, 1e-8);
      for (std::size_t s = 0; s < w.size(); ++s)
        EXPECT_NEAR(w[s] / wt[s], k * (1 + beta * (s % 2 == 0 ? 1 : -1)), 1e-9 * k);
    }
}

TEST(QPRWeights, ChristoffelRouteAgrees) {
  Sampler rng(22);
  for (int N = 1; N <= 7; ++N)
    for (double alpha : {0.25, 0.5, 0.75}) {
      const auto f = support::sample_family(rng, N, alpha);
      const auto a = qpr::weights(f);
      const auto b = qpr::weights_from_christoffel(f);
      for (std::size_t s = 0; s < a.w.size(); ++s)
        EXPECT_LE(support::rel(a.w[s], b.w[s]), 1e-7) << "N=" << N << " s=" << s;
    }
}

TEST(QPRWeights, OddNormIsSignedRootOfH) {
  // odd N: K_N = sgn(c - a) sqrt(h_N)
  Sampler rng(23);
  for (int N = 1; N <= 9; N += 2)
    for (int trial = 0; trial < 4; ++trial) {
      const auto f = support::sample_family(rng, N, 0.5);
      const auto lw = qpr::weights(f);
      const double root = std::sqrt(lw.h[N]);
      EXPECT_NEAR(lw.K_N, f.c > f.a ? root : -root, 1e-10 * root) << "N=" << N;
    }
}

TEST(QPRWeights, SimpleRNAlternatesAlongSortedLattice) {
  // at alpha = 1/2, R_N alternates in sign with magnitude sqrt(h_N) over the
  // lattice sorted ascending, positive at the largest point
  Sampler rng(24);
  for (int N = 1; N <= 7; ++N)
    for (int trial = 0; trial < 4; ++trial) {
      const auto f = support::sample_family(rng, N, 0.5);
      const auto sys = qpr::tridiagonal(f);
      const auto lw = qpr::weights(f);
      const double root = std::sqrt(lw.h[N]);
      const auto rank = ascending_rank(lw);
      for (std::size_t s = 0; s < lw.x.size(); ++s) {
        const double sign = (N + rank[s]) % 2 == 0 ? 1.0 : -1.0;
        EXPECT_NEAR(sys.eval(N, lw.x[s]), sign * root, 1e-8 * root) << "N=" << N << " s=" << s;
      }
    }
}

TEST(QPRWeights, SimpleRNIndexSignFlipsWhenCExceedsA) {
  // the interleaved labels are ascending only for a > c; for a < c each
  // adjacent pair swaps and (-1)^{N+s} is negated
  const qpr::Family<double> f{0.6, 0.8, 0.5, 0.5, 5};
  const auto sys = qpr::tridiagonal(f);
  const auto lw = qpr::weights(f);
  const double root = std::sqrt(lw.h[f.N]);
  for (int s = 0; s <= f.N; ++s) {
    const double sign = (f.N + s) % 2 == 0 ? 1.0 : -1.0;
    EXPECT_NEAR(sys.eval(f.N, lw.x[s]), -sign * root, 1e-10 * root);
  }
}

TEST(QPRWeights, FiniteDifferenceDerivativeAgreesAtExtendedPrecision) {
  ExtendedDigitsScope digits(50);
  for (const auto& fd : {kOdd, kEven}) {
    const auto f = support::convert_family<Extended>(fd);
    const auto sys = qpr::tridiagonal(f);
    const auto lw = qpr::lattice(f);
    for (std::size_t s = 0; s < lw.x.size(); ++s) {
      const Extended exact = qpr::char_poly_derivative(lw, s);
      const Extended fd_value = qpr::char_poly_derivative_fd(sys, lw.x[s]);
      EXPECT_LT(support::rel(exact, fd_value), Extended("1e-6"));
    }
  }
}

TEST(QPRWeights, DegenerateFamilyIsRefused) {
  const qpr::Family<double> f{0.6, 0.6, 0.4, 0.5, 5};
  EXPECT_THROW(qpr::weights(f), DegenerateError);
  EXPECT_THROW(qpr::weights_from_christoffel(f), DegenerateError);
}

TEST(QPRQDifference, Eigenvalues) {
  for (int N = 1; N <= 12; ++N) {
    EXPECT_EQ(qpr::qdiff_eigenvalue(0.5, 0, N), 0.0);
    EXPECT_NEAR(qpr::qdiff_eigenvalue(0.5, N, N), 0.0, 1e-15);
    for (int n = 0; n <= N; ++n) {
      const double l1 = qpr::qdiff_eigenvalue(0.37, n, N);
      const double l2 = qpr::qdiff_eigenvalue(0.37, N - n, N);
      EXPECT_LE(std::abs(l1 - l2), 1e-14 * std::max(1.0, std::abs(l1)));
    }
  }
}

TEST(QPRQDifference, ConstantsAreAnnihilated) {
  EXPECT_NEAR(qpr::qdiff_residual(kOdd, 0, 1.7).residual, 0.0, 1e-15);
}

TEST(QPRQDifference, ResidualSmallForAllDegrees) {
  Sampler rng(24);
  for (int N = 1; N <= 7; ++N)
    for (double alpha : {0.25, 0.5, 0.75}) {
      const auto f = support::sample_family(rng, N, alpha);
      const auto sys = qpr::tridiagonal(f);
      for (int trial = 0; trial < 10; ++trial) {
        const auto z = support::unit_circle(rng);
        for (int n = 0; n <= N; ++n) {
          const auto r = qpr::qdiff_residual(f, sys, n, z);
          EXPECT_LE(std::abs(r.residual), 1e-9 * r.scale) << "N=" << N << " n=" << n;
        }
      }
    }
}

TEST(QPRPositivity, Examples) {
  const auto good = qpr::positivity_check(kEven);
  EXPECT_TRUE(good.conditions_hold);
  EXPECT_TRUE(good.u_scan_positive);

  const double q = 0.5, c = 0.9;
  const qpr::Family<double> bad{c * q * q, c, 0.4, q, 5};
  const auto r = qpr::positivity_check(bad);
  EXPECT_FALSE(r.conditions_hold);
  EXPECT_EQ(r.violated, "q < a/c < 1/q");
  EXPECT_FALSE(r.u_scan_positive);
  EXPECT_GT(r.first_nonpositive, 0);

  EXPECT_TRUE(qpr::positivity_check(qpr::Family<double>{0.8, 0.6, 0.5, 0.4, 7}).ok());
}

TEST(QPRPositivity, EvenCaseNeedsAAboveC) {
  // inside the printed conditions but c > a: u_j changes sign
  const qpr::Family<double> f{0.7, 0.9, 0.3, 0.5, 4};
  const auto r = qpr::positivity_check(f);
  EXPECT_TRUE(r.conditions_hold);
  EXPECT_FALSE(r.u_scan_positive);
  EXPECT_EQ(r.first_nonpositive, f.j());
}

TEST(QPRFamily, Validation) {
  EXPECT_THROW(qpr::tridiagonal(qpr::Family<double>{0.9, 0.7, 1.5, 0.5, 3}), ArgumentError);
  EXPECT_THROW(qpr::tridiagonal(qpr::Family<double>{0.9, 0.7, 0.5, 1.5, 3}), ArgumentError);
  EXPECT_THROW(qpr::tridiagonal(qpr::Family<double>{0.9, 0.7, 0.5, 0.5, 0}), ArgumentError);
}
