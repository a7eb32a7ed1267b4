#include "qconc/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qconc/kernels.hpp"

namespace qconc {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {
  if (rows == 0 || cols == 0)
    throw std::invalid_argument("matrix dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0)
    throw std::invalid_argument("matrix dimensions must be positive");
  if (data_.size() != rows * cols)
    throw std::invalid_argument(
        "entry count " + std::to_string(data_.size()) + " does not match " +
        std::to_string(rows) + "x" + std::to_string(cols));
}

ComplexMatrix ComplexMatrix::identity(std::size_t d) {
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = cplx(1.0, 0.0);
  return m;
}

bool ComplexMatrix::all_finite() const {
  for (const cplx& v : data_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument(
        "matmul dimension mismatch: " + std::to_string(a.rows()) + "x" +
        std::to_string(a.cols()) + " times " + std::to_string(b.rows()) + "x" +
        std::to_string(b.cols()));
  ComplexMatrix c(a.rows(), b.cols());
  kernels::active().matmul(a.data(), b.data(), c.data(), a.rows(), a.cols(),
                           b.cols());
  return c;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(j, i) = std::conj(a(i, j));
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t p = 0; p < a.rows(); ++p)
    for (std::size_t q = 0; q < a.cols(); ++q) {
      const cplx apq = a(p, q);
      if (apq == cplx(0.0, 0.0)) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          out(p * b.rows() + r, q * b.cols() + c) = apq * b(r, c);
    }
  return out;
}

cplx trace(const ComplexMatrix& a) {
  if (!a.is_square())
    throw std::invalid_argument("trace requires a square matrix");
  cplx t(0.0, 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

double purity(const ComplexMatrix& a) {
  if (!a.is_square())
    throw std::invalid_argument("purity requires a square matrix");
  // tr(a*a) = sum_ij a(i,j) a(j,i), no product needed
  cplx t(0.0, 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t += a(i, j) * a(j, i);
  return t.real();
}

double frobenius_norm(const ComplexMatrix& a) {
  return std::sqrt(kernels::active().sumsq(a.size(), a.data()));
}

double hermiticity_defect(const ComplexMatrix& a) {
  if (!a.is_square())
    throw std::invalid_argument("hermiticity defect requires a square matrix");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      acc += std::norm(a(i, j) - std::conj(a(j, i)));
  return std::sqrt(acc);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff requires equal shapes");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matmul(a, b);
}

ComplexMatrix operator*(cplx scale, const ComplexMatrix& a) {
  ComplexMatrix out = a;
  kernels::active().axpby(out.size(), cplx(0.0, 0.0), out.data(), scale,
                          out.data());
  return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix sum requires equal shapes");
  ComplexMatrix out = b;
  kernels::active().axpby(out.size(), cplx(1.0, 0.0), a.data(),
                          cplx(1.0, 0.0), out.data());
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix difference requires equal shapes");
  ComplexMatrix out = b;
  kernels::active().axpby(out.size(), cplx(1.0, 0.0), a.data(),
                          cplx(-1.0, 0.0), out.data());
  return out;
}

}  // namespace qconc
