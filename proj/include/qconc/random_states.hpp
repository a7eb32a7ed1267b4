#pragma once

#include <random>
#include <vector>

#include "qconc/matrix.hpp"
#include "qconc/qstate.hpp"

namespace qconc {

/// Standard complex Gaussian samples (independent N(0,1) real and
/// imaginary parts).
std::vector<cplx> gaussian_vector(std::mt19937_64& rng, std::size_t n);

/// Haar-like random pure state: a normalized complex Gaussian vector.
PureState random_pure_state(const std::vector<int>& dims, std::mt19937_64& rng);

/// Full-rank random density matrix rho = G G^dag / tr(G G^dag).
MultipartiteState random_mixed_state(const std::vector<int>& dims,
                                     std::mt19937_64& rng);

/// Random convex mixture of `terms` product pure states; separable by
/// construction.
MultipartiteState random_product_mixture(const std::vector<int>& dims,
                                         int terms, std::mt19937_64& rng);

/// Random unitary: the eigenvector matrix of a random Hermitian matrix.
ComplexMatrix random_unitary(int d, std::mt19937_64& rng);

}  // namespace qconc
