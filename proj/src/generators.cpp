#include "qconc/generators.hpp"

#include <cmath>
#include <stdexcept>

namespace qconc {

GeneratorBasis su_generators(int d) {
  if (d < 2) throw std::invalid_argument("su_generators requires d >= 2");
  const std::size_t dim = static_cast<std::size_t>(d);
  GeneratorBasis basis{d, {}};
  basis.mats.reserve(dim * dim - 1);

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  // (E_jk + E_kj)/sqrt(2) for j < k
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t k = j + 1; k < dim; ++k) {
      ComplexMatrix m(dim, dim);
      m(j, k) = cplx(inv_sqrt2, 0.0);
      m(k, j) = cplx(inv_sqrt2, 0.0);
      basis.mats.push_back(std::move(m));
    }

  // -i (E_jk - E_kj)/sqrt(2) for j < k
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t k = j + 1; k < dim; ++k) {
      ComplexMatrix m(dim, dim);
      m(j, k) = cplx(0.0, -inv_sqrt2);
      m(k, j) = cplx(0.0, inv_sqrt2);
      basis.mats.push_back(std::move(m));
    }

  // diag(1,...,1,-l,0,...,0)/sqrt(l(l+1)) with l ones
  for (std::size_t l = 1; l < dim; ++l) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < l; ++i) m(i, i) = cplx(scale, 0.0);
    m(l, l) = cplx(-scale * static_cast<double>(l), 0.0);
    basis.mats.push_back(std::move(m));
  }

  return basis;
}

}  // namespace qconc
