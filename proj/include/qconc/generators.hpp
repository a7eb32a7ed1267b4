#pragma once

#include <vector>

#include "qconc/matrix.hpp"

namespace qconc {

/// The d^2 - 1 generalized Gell-Mann matrices of SU(d), scaled to unit
/// Hilbert-Schmidt norm: tr(g_k g_l) = delta_kl, each Hermitian and
/// traceless. Fixed order: symmetric block, antisymmetric block, diagonal
/// block, each lexicographic. Bound tables index rows/columns by this order.
struct GeneratorBasis {
  int d = 0;
  std::vector<ComplexMatrix> mats;
};

GeneratorBasis su_generators(int d);

}  // namespace qconc
