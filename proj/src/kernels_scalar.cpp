#include "qconc/kernels.hpp"

// Reference implementations. Deliberately plain loops: these define the
// semantics the SIMD variants are equivalence-tested against.

namespace qconc::kernels {
namespace {

void matmul_scalar(const cplx* a, const cplx* b, cplx* c,
                   std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t j = 0; j < n; ++j) crow[j] = cplx(0.0, 0.0);
    for (std::size_t l = 0; l < k; ++l) {
      const cplx av = a[i * k + l];
      const cplx* brow = b + l * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
    }
  }
}

void rotate_pair_scalar(cplx* x, cplx* y, std::size_t n, std::size_t stride,
                        double c, cplx s) {
  const cplx sc = std::conj(s);
  for (std::size_t i = 0; i < n; ++i) {
    const cplx xi = x[i * stride];
    const cplx yi = y[i * stride];
    x[i * stride] = c * xi - s * yi;
    y[i * stride] = sc * xi + c * yi;
  }
}

void axpby_scalar(std::size_t n, cplx a, const cplx* x, cplx b, cplx* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] = a * x[i] + b * y[i];
}

cplx dot_conj_scalar(std::size_t n, const cplx* x, const cplx* y) {
  cplx acc(0.0, 0.0);
  for (std::size_t i = 0; i < n; ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

double sumsq_scalar(std::size_t n, const cplx* x) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::norm(x[i]);
  return acc;
}

}  // namespace

const Backend& scalar_backend() {
  static constexpr Backend table{
      "scalar", matmul_scalar, rotate_pair_scalar,
      axpby_scalar, dot_conj_scalar, sumsq_scalar};
  return table;
}

}  // namespace qconc::kernels
