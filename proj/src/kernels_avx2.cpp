#include "qconc/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

// AVX2 variants. A __m256d carries two complex doubles in interleaved
// (re, im) layout; complex products use the permute/fmaddsub pattern.
// Callers must have verified CPU support (see kernels.cpp).

namespace qconc::kernels {
namespace {

// (p_re + i p_im) * q for two packed complex values, p broadcast.
inline __m256d cmul_broadcast(__m256d p_re, __m256d p_im, __m256d q) {
  const __m256d q_swap = _mm256_permute_pd(q, 0x5);
  // even lane: p_re*q_re - p_im*q_im, odd lane: p_re*q_im + p_im*q_re
  return _mm256_fmaddsub_pd(p_re, q, _mm256_mul_pd(p_im, q_swap));
}

void matmul_avx2(const cplx* a, const cplx* b, cplx* c,
                 std::size_t m, std::size_t k, std::size_t n) {
  const double* bd = reinterpret_cast<const double*>(b);
  double* cd = reinterpret_cast<double*>(c);
  for (std::size_t i = 0; i < m; ++i) {
    double* crow = cd + 2 * i * n;
    for (std::size_t j = 0; j < 2 * n; ++j) crow[j] = 0.0;
    for (std::size_t l = 0; l < k; ++l) {
      const cplx av = a[i * k + l];
      const __m256d ar = _mm256_set1_pd(av.real());
      const __m256d ai = _mm256_set1_pd(av.imag());
      const double* brow = bd + 2 * l * n;
      std::size_t j = 0;
      for (; j + 2 <= n; j += 2) {
        const __m256d bv = _mm256_loadu_pd(brow + 2 * j);
        __m256d cv = _mm256_loadu_pd(crow + 2 * j);
        cv = _mm256_add_pd(cv, cmul_broadcast(ar, ai, bv));
        _mm256_storeu_pd(crow + 2 * j, cv);
      }
      if (j < n) {
        const cplx bv = b[l * n + j];
        c[i * n + j] += av * bv;
      }
    }
  }
}

void rotate_pair_avx2(cplx* x, cplx* y, std::size_t n, std::size_t stride,
                      double c, cplx s) {
  if (stride == 1) {
    double* xd = reinterpret_cast<double*>(x);
    double* yd = reinterpret_cast<double*>(y);
    const __m256d cv = _mm256_set1_pd(c);
    const __m256d sr = _mm256_set1_pd(s.real());
    const __m256d si = _mm256_set1_pd(s.imag());
    const __m256d nsi = _mm256_set1_pd(-s.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
      const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
      const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
      const __m256d sy = cmul_broadcast(sr, si, yv);    // s*y
      const __m256d scx = cmul_broadcast(sr, nsi, xv);  // conj(s)*x
      _mm256_storeu_pd(xd + 2 * i, _mm256_fmsub_pd(cv, xv, sy));
      _mm256_storeu_pd(yd + 2 * i, _mm256_fmadd_pd(cv, yv, scx));
    }
    if (i < n) {
      const cplx xi = x[i], yi = y[i];
      x[i] = c * xi - s * yi;
      y[i] = std::conj(s) * xi + c * yi;
    }
    return;
  }
  const cplx sc = std::conj(s);
  for (std::size_t i = 0; i < n; ++i) {
    const cplx xi = x[i * stride];
    const cplx yi = y[i * stride];
    x[i * stride] = c * xi - s * yi;
    y[i * stride] = sc * xi + c * yi;
  }
}

void axpby_avx2(std::size_t n, cplx a, const cplx* x, cplx b, cplx* y) {
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  const __m256d br = _mm256_set1_pd(b.real());
  const __m256d bi = _mm256_set1_pd(b.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    const __m256d r =
        _mm256_add_pd(cmul_broadcast(ar, ai, xv), cmul_broadcast(br, bi, yv));
    _mm256_storeu_pd(yd + 2 * i, r);
  }
  for (; i < n; ++i) y[i] = a * x[i] + b * y[i];
}

cplx dot_conj_avx2(std::size_t n, const cplx* x, const cplx* y) {
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    const __m256d x_re = _mm256_movedup_pd(xv);
    const __m256d x_im = _mm256_permute_pd(xv, 0xF);
    const __m256d y_swap = _mm256_permute_pd(yv, 0x5);
    // conj(x)*y: even lane x_re*y_re + x_im*y_im, odd lane x_re*y_im - x_im*y_re
    const __m256d t =
        _mm256_fmsubadd_pd(x_re, yv, _mm256_mul_pd(x_im, y_swap));
    acc = _mm256_add_pd(acc, t);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  cplx result(lanes[0] + lanes[2], lanes[1] + lanes[3]);
  for (; i < n; ++i) result += std::conj(x[i]) * y[i];
  return result;
}

double sumsq_avx2(std::size_t n, const cplx* x) {
  const double* xd = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    acc = _mm256_fmadd_pd(xv, xv, acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double result = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) result += std::norm(x[i]);
  return result;
}

}  // namespace

const Backend* avx2_backend() {
  static constexpr Backend table{
      "avx2", matmul_avx2, rotate_pair_avx2,
      axpby_avx2, dot_conj_avx2, sumsq_avx2};
  return &table;
}

}  // namespace qconc::kernels

#else
#error "kernels_avx2.cpp must be compiled with -mavx2 -mfma"
#endif
