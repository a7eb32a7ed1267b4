#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qconc {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. The universal carrier for density
/// matrices, their reshuffles and all derived real/complex tables.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;  // empty 0 x 0, only useful as a placeholder

  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }
  std::size_t size() const { return data_.size(); }

  bool all_finite() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix dagger(const ComplexMatrix& a);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
cplx trace(const ComplexMatrix& a);

/// Re tr(a*a), computed without forming the product. For a density matrix
/// this lies in [1/d, 1].
double purity(const ComplexMatrix& a);

double frobenius_norm(const ComplexMatrix& a);

/// ||a - a^dag||_F for square a.
double hermiticity_defect(const ComplexMatrix& a);

/// max_ij |a(i,j) - b(i,j)|; matrices must have equal shape.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx scale, const ComplexMatrix& a);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qconc
