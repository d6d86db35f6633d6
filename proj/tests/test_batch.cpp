#include "support.hpp"

#include <gtest/gtest.h>

using namespace qortho;
using support::Sampler;

namespace {

std::vector<double> points(Sampler& rng, std::size_t n) {
  std::vector<double> x(n);
  for (auto& v : x)
    v = rng.uniform(-2.0, 4.0);
  return x;
}

} // namespace

TEST(Batch, TableMatchesSerialBitForBit) {
  Sampler rng(61);
  const auto sys = qpr::tridiagonal(qpr::Family<double>{0.9, 0.7, 0.3, 0.5, 9});
  const auto x = points(rng, 4097);
  const auto par = batch::evaluate_table(sys, x, sys.b.size() + 1);
  const auto ser = batch::serial::evaluate_table<double>(sys, x, sys.b.size() + 1);
  EXPECT_EQ(par.data, ser.data);
}

TEST(Batch, TableRowsAreTheRecurrence) {
  const auto sys = qpr::tridiagonal(qpr::Family<double>{0.9, 0.7, 0.3, 0.5, 5});
  const std::vector<double> x = {0.4, 1.1, 2.5};
  const auto t = batch::evaluate_table(sys, x, 7);
  for (std::size_t s = 0; s < x.size(); ++s)
    for (int n = 0; n < 7; ++n)
      EXPECT_EQ(t(n, s), sys.eval(n, x[s]));
}

TEST(Batch, GramMatchesSerialBitForBit) {
  Sampler rng(62);
  const auto sys = qpr::tridiagonal(qpr::Family<double>{0.9, 0.7, 0.3, 0.5, 9});
  const auto x = points(rng, 513);
  std::vector<double> w(x.size());
  for (auto& v : w)
    v = rng.uniform(0.0, 1.0);
  const auto table = batch::evaluate_table(sys, x, sys.b.size());
  EXPECT_EQ(batch::gram_matrix(table, w).data, batch::serial::gram_matrix<double>(table, w).data);
}

TEST(Batch, GramErrorOfAnExactQuadrature) {
  const auto f = qpr::Family<double>{0.9, 0.7, 0.3, 0.5, 6};
  const auto lw = qpr::weights(f);
  const auto table = batch::evaluate_table(qpr::tridiagonal(f), lw.x, lw.x.size());
  const auto e = batch::gram_error<double>(batch::gram_matrix(table, lw.w), lw.h);
  EXPECT_LE(e.off_diagonal, 1e-12);
  EXPECT_LE(e.diagonal, 1e-12);
}

TEST(Batch, SerialReferenceAtExtendedPrecision) {
  ExtendedDigitsScope digits(50);
  const auto f = support::convert_family<Extended>(qpr::Family<double>{0.9, 0.7, 0.3, 0.5, 6});
  const auto lw = qpr::weights(f);
  const auto table = batch::serial::evaluate_table<Extended>(qpr::tridiagonal(f), lw.x, lw.x.size());
  const auto e =
      batch::gram_error<Extended>(batch::serial::gram_matrix<Extended>(table, lw.w), lw.h);
  EXPECT_LT(e.off_diagonal, Extended("1e-40"));
  EXPECT_LT(e.diagonal, Extended("1e-40"));
}
