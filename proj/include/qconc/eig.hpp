#pragma once

#include <vector>

#include "qconc/matrix.hpp"
#include "qconc/tolerances.hpp"

namespace qconc {

/// Spectral decomposition of a Hermitian matrix. Eigenvalues are real and
/// descending; column k of eigenvectors is the unit eigenvector for
/// eigenvalues[k], and the columns are orthonormal.
struct EigResult {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Full Hermitian eigendecomposition by cyclic Jacobi rotations. Sweeps until
/// every off-diagonal magnitude drops below tol.jacobi_offdiag * ||h||_F.
/// Throws for non-square input, for a Hermiticity defect beyond
/// tol.hermiticity * max(1, ||h||_F), and if convergence needs more than
/// tol.jacobi_max_sweeps sweeps.
EigResult hermitian_eig(const ComplexMatrix& h, const Tolerances& tol = {});

/// Singular values, non-negative and descending, via the Hermitian
/// eigenvalues of the smaller Gram matrix. Tiny negative Gram eigenvalues
/// are clamped to zero before the square root.
std::vector<double> singular_values(const ComplexMatrix& a,
                                    const Tolerances& tol = {});

/// Sum of singular values.
double trace_norm(const ComplexMatrix& a, const Tolerances& tol = {});

}  // namespace qconc
