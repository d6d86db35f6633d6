#pragma once

// Jacobi-matrix view of a monic recurrence: symmetrization, spectrum and the
// alpha-isospectrality check.

#include "qortho/qpara_racah.hpp"
#include "qortho/tridiagonal.hpp"

#include <span>
#include <vector>

namespace qortho::spectral {

struct SymmetricTridiagonal {
  std::vector<double> d; ///< diagonal d_0..d_N
  std::vector<double> e; ///< off-diagonal e_1..e_N stored at e[0..N-1]

  std::size_t size() const { return d.size(); }
  /// max_i (|d_i| + |e_i| + |e_{i+1}|), bounded by the row-sum norm.
  double norm() const;
  /// max |M - J M J| over entries, J the exchange matrix.
  double persymmetry_residual() const;
};

/// d_n = b_n, e_n = sqrt(u_n); throws ArgumentError when some u_n <= 0.
SymmetricTridiagonal build_jacobi(const TridiagonalSystem<double>& sys);

/// All eigenvalues, ascending.
std::vector<double> spectrum(const SymmetricTridiagonal& m);

/// Pairwise distance of two ascending lists of equal length (sorted matching).
double sorted_distance(std::span<const double> lhs, std::span<const double> rhs);

struct IsospectralityReport {
  double max_deviation = 0.0; ///< max over alphas of distance to the alpha = 1/2 spectrum
  double lattice_deviation = 0.0; ///< max over alphas of distance to the sorted bi-lattice
  double norm = 0.0;              ///< largest matrix norm seen
};

/// Spectra of the Jacobi matrices for each alpha compared with alpha = 1/2
/// and with the closed-form lattice. `f.alpha` is ignored.
IsospectralityReport isospectrality_check(const qpr::Family<double>& f,
                                          std::span<const double> alphas);

} // namespace qortho::spectral
