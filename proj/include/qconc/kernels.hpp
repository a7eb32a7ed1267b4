#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qconc::kernels {

using cplx = std::complex<double>;

/// The data-parallel inner loops behind the matrix layer. Every backend
/// fills the same table; all variants agree with the scalar reference up to
/// floating-point rounding (FMA contraction and reassociation).
struct Backend {
  const char* name;

  /// c = a * b with row-major storage; a is m x k, b is k x n.
  /// c must not alias a or b.
  void (*matmul)(const cplx* a, const cplx* b, cplx* c,
                 std::size_t m, std::size_t k, std::size_t n);

  /// Unitary plane rotation of two strided length-n vectors:
  ///   x' = c*x - s*y,   y' = conj(s)*x + c*y
  void (*rotate_pair)(cplx* x, cplx* y, std::size_t n, std::size_t stride,
                      double c, cplx s);

  /// y = a*x + b*y
  void (*axpby)(std::size_t n, cplx a, const cplx* x, cplx b, cplx* y);

  /// sum_i conj(x[i]) * y[i]
  cplx (*dot_conj)(std::size_t n, const cplx* x, const cplx* y);

  /// sum_i |x[i]|^2
  double (*sumsq)(std::size_t n, const cplx* x);
};

const Backend& scalar_backend();

/// AVX2 table, or nullptr when not compiled in.
const Backend* avx2_backend();

/// True when the AVX2 backend is compiled in and the CPU supports it.
bool avx2_usable();

/// Currently selected backend. Defaults to the best usable one.
const Backend& active();

/// Pick a backend by name: "auto", "scalar" or "avx2". Throws
/// std::invalid_argument for unknown names and std::runtime_error when the
/// requested backend is unusable. Call at startup; not meant to race with
/// running kernels.
void select(std::string_view name);

std::vector<std::string> usable_backends();

}  // namespace qconc::kernels
