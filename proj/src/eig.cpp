#include "qconc/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qconc/kernels.hpp"

namespace qconc {
namespace {

// One Jacobi similarity A <- J^dag A J in the (p, q) plane, with V <- V J.
// The rotation parameters zero out A(p, q):
//   tau = (A_qq - A_pp) / (2 |A_pq|), t the stable root of t^2 + 2 tau t = 1,
//   c = 1/sqrt(1 + t^2), s = t c * phase(A_pq).
void apply_rotation(ComplexMatrix& a, ComplexMatrix& v, std::size_t p,
                    std::size_t q) {
  const std::size_t n = a.rows();
  const cplx apq = a(p, q);
  const double mag = std::abs(apq);
  const double alpha = a(p, p).real();
  const double gamma = a(q, q).real();

  const double tau = (gamma - alpha) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
  const double c = 1.0 / std::hypot(1.0, t);
  const cplx s = (t * c) * (apq / mag);

  const auto& k = kernels::active();
  // rows p,q of J^dag A, then columns p,q of (.) J; V collects column ops
  k.rotate_pair(a.data() + p * n, a.data() + q * n, n, 1, c, s);
  k.rotate_pair(a.data() + p, a.data() + q, n, n, c, std::conj(s));
  k.rotate_pair(v.data() + p, v.data() + q, n, n, c, std::conj(s));

  // analytically exact values for the pivot entries
  a(p, q) = cplx(0.0, 0.0);
  a(q, p) = cplx(0.0, 0.0);
  a(p, p) = cplx(a(p, p).real(), 0.0);
  a(q, q) = cplx(a(q, q).real(), 0.0);
}

double max_offdiag(const ComplexMatrix& a) {
  double m = 0.0;
  for (std::size_t p = 0; p + 1 < a.rows(); ++p)
    for (std::size_t q = p + 1; q < a.rows(); ++q)
      m = std::max(m, std::abs(a(p, q)));
  return m;
}

}  // namespace

EigResult hermitian_eig(const ComplexMatrix& h, const Tolerances& tol) {
  if (!h.is_square())
    throw std::invalid_argument("hermitian_eig requires a square matrix");
  const std::size_t n = h.rows();
  const double norm = frobenius_norm(h);
  if (hermiticity_defect(h) > tol.hermiticity * std::max(1.0, norm))
    throw std::invalid_argument(
        "hermitian_eig input is not Hermitian within tolerance");

  // Work on the Hermitian average so rounding in the input cannot drift the
  // iteration; rotations then preserve Hermiticity exactly.
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double thresh = tol.jacobi_offdiag * norm;
  if (n > 1 && norm > 0.0) {
    int sweep = 0;
    while (max_offdiag(a) >= thresh) {
      if (++sweep > tol.jacobi_max_sweeps)
        throw std::runtime_error("hermitian_eig: Jacobi sweeps exceeded " +
                                 std::to_string(tol.jacobi_max_sweeps));
      for (std::size_t p = 0; p + 1 < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
          if (std::abs(a(p, q)) >= thresh) apply_rotation(a, v, p, q);
    }
  }

  // descending eigenvalues, stable in the Jacobi output order on ties
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });

  EigResult out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> singular_values(const ComplexMatrix& a,
                                    const Tolerances& tol) {
  // Eigenvalues of the smaller of a^dag a and a a^dag; equal nonzero spectra.
  const ComplexMatrix gram = a.rows() >= a.cols()
                                 ? matmul(dagger(a), a)
                                 : matmul(a, dagger(a));
  EigResult eig = hermitian_eig(gram, tol);
  std::vector<double> sv(eig.eigenvalues.size());
  for (std::size_t i = 0; i < sv.size(); ++i)
    sv[i] = std::sqrt(std::max(eig.eigenvalues[i], 0.0));
  return sv;
}

double trace_norm(const ComplexMatrix& a, const Tolerances& tol) {
  const std::vector<double> sv = singular_values(a, tol);
  return std::accumulate(sv.begin(), sv.end(), 0.0);
}

}  // namespace qconc
