#include "qortho/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace qortho::spectral {

double SymmetricTridiagonal::norm() const {
  double best = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    double row = std::abs(d[i]);
    if (i > 0)
      row += std::abs(e[i - 1]);
    if (i < e.size())
      row += std::abs(e[i]);
    best = std::max(best, row);
  }
  return best;
}

double SymmetricTridiagonal::persymmetry_residual() const {
  const std::size_t n = d.size();
  double r = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    r = std::max(r, std::abs(d[i] - d[n - 1 - i]));
  for (std::size_t i = 0; i < e.size(); ++i)
    r = std::max(r, std::abs(e[i] - e[e.size() - 1 - i]));
  return r;
}

SymmetricTridiagonal build_jacobi(const TridiagonalSystem<double>& sys) {
  SymmetricTridiagonal m;
  m.d = sys.b;
  for (std::size_t n = 1; n < sys.u.size(); ++n) {
    if (!(sys.u[n] > 0.0))
      throw ArgumentError("Jacobi matrix is not symmetrizable: u_" + std::to_string(n) + " <= 0");
    m.e.push_back(std::sqrt(sys.u[n]));
  }
  return m;
}

std::vector<double> spectrum(const SymmetricTridiagonal& m) {
  const auto n = static_cast<Eigen::Index>(m.d.size());
  if (n == 0)
    return {};
  Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(m.d.data(), n);
  Eigen::VectorXd sub(std::max<Eigen::Index>(n - 1, 0));
  for (Eigen::Index i = 0; i + 1 < n; ++i)
    sub[i] = m.e[static_cast<std::size_t>(i)];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw Error("tridiagonal eigenvalue iteration did not converge");
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(out.begin(), out.end());
  return out;
}

double sorted_distance(std::span<const double> lhs, std::span<const double> rhs) {
  if (lhs.size() != rhs.size())
    throw ArgumentError("spectra have different sizes");
  double r = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i)
    r = std::max(r, std::abs(lhs[i] - rhs[i]));
  return r;
}

IsospectralityReport isospectrality_check(const qpr::Family<double>& f,
                                          std::span<const double> alphas) {
  auto with_alpha = [&](double alpha) {
    auto g = f;
    g.alpha = alpha;
    return build_jacobi(qpr::tridiagonal(g));
  };
  const auto reference_matrix = with_alpha(0.5);
  const auto reference = spectrum(reference_matrix);

  auto grid = qpr::lattice(f).x;
  std::sort(grid.begin(), grid.end());

  IsospectralityReport report;
  report.norm = reference_matrix.norm();
  report.lattice_deviation = sorted_distance(reference, grid);
  for (double alpha : alphas) {
    if (!(alpha > 0.0 && alpha < 1.0))
      throw ArgumentError("isospectrality: alpha must lie in (0,1)");
    const auto m = with_alpha(alpha);
    const auto ev = spectrum(m);
    report.norm = std::max(report.norm, m.norm());
    report.max_deviation = std::max(report.max_deviation, sorted_distance(ev, reference));
    report.lattice_deviation = std::max(report.lattice_deviation, sorted_distance(ev, grid));
  }
  return report;
}

} // namespace qortho::spectral
