#pragma once

namespace qconc {

/// Every numerical tolerance used by the library, in one place. Functions
/// take this record as a defaulted argument; callers override single fields
/// when they need to.
struct Tolerances {
  /// Accepted Hermiticity defect, relative: ||m - m^dag||_F <= hermiticity * max(1, ||m||_F).
  double hermiticity = 1e-8;
  /// Accepted |trace - 1| for density matrices.
  double trace_one = 1e-8;
  /// Eigenvalues down to -positivity are accepted for density matrices.
  double positivity = 1e-8;
  /// Accepted deviation of pure-state amplitude vectors from unit norm.
  double unit_norm = 1e-10;
  /// Accepted deviation of mixture weights from their normalization.
  double weight_norm = 1e-10;
  /// Jacobi sweep convergence: max off-diagonal magnitude < jacobi_offdiag * ||h||_F.
  double jacobi_offdiag = 1e-12;
  int jacobi_max_sweeps = 100;
  /// Gram eigenvalues above -sv_clamp are clamped to zero before the square root.
  double sv_clamp = 1e-12;
  /// Eigenvalues below this weight are skipped by the spectral upper bound.
  double spectral_cutoff = 1e-12;
  /// A lower bound above this certifies entanglement.
  double verdict = 1e-9;
};

}  // namespace qconc
