#include "qconc/qstate.hpp"

#include <cmath>
#include <numeric>

#include "qconc/eig.hpp"
#include "qconc/kernels.hpp"

namespace qconc {
namespace {

// Splits the full mixed-radix basis index into a sub-index over `sel` and
// one over the complement. All reshuffling maps (partial trace, bipartite
// view, and through it transpose/realignment) key off this one helper so the
// index convention cannot drift: subsystems in increasing order, first
// subsystem most significant, full = sel_offset[a] + rest_offset[b].
class SplitIndexer {
 public:
  SplitIndexer(const std::vector<int>& dims, const std::vector<int>& sel) {
    const int n = static_cast<int>(dims.size());
    std::vector<char> in_sel(n, 0);
    for (int s : sel) in_sel[s] = 1;

    std::vector<long> stride(n);
    long acc = 1;
    for (int i = n - 1; i >= 0; --i) {
      stride[i] = acc;
      acc *= dims[i];
    }

    std::vector<int> sel_dims, rest_dims;
    std::vector<long> sel_strides, rest_strides;
    for (int i = 0; i < n; ++i) {
      if (in_sel[i]) {
        sel_dims.push_back(dims[i]);
        sel_strides.push_back(stride[i]);
      } else {
        rest_dims.push_back(dims[i]);
        rest_strides.push_back(stride[i]);
      }
    }
    sel_offset_ = build_offsets(sel_dims, sel_strides);
    rest_offset_ = build_offsets(rest_dims, rest_strides);
  }

  long dim_sel() const { return static_cast<long>(sel_offset_.size()); }
  long dim_rest() const { return static_cast<long>(rest_offset_.size()); }

  long fuse(long a, long b) const { return sel_offset_[a] + rest_offset_[b]; }

 private:
  static std::vector<long> build_offsets(const std::vector<int>& dims,
                                         const std::vector<long>& strides) {
    long total = 1;
    for (int d : dims) total *= d;
    std::vector<long> offsets(total, 0);
    for (long idx = 0; idx < total; ++idx) {
      long rest = idx;
      long off = 0;
      for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
        off += (rest % dims[i]) * strides[i];
        rest /= dims[i];
      }
      offsets[idx] = off;
    }
    return offsets;
  }

  std::vector<long> sel_offset_;
  std::vector<long> rest_offset_;
};

void check_dims(const std::vector<int>& dims) {
  if (dims.size() < 1)
    throw StateError(StateDefect::DimensionMismatch,
                     "state needs at least one subsystem");
  for (std::size_t i = 0; i < dims.size(); ++i)
    if (dims[i] < 2)
      throw StateError(StateDefect::DimensionMismatch,
                       "dims[" + std::to_string(i) + "] = " +
                           std::to_string(dims[i]) + " must be >= 2");
}

long dims_product(const std::vector<int>& dims) {
  return std::accumulate(dims.begin(), dims.end(), 1L,
                         [](long a, int d) { return a * d; });
}

void check_subset(const std::vector<int>& keep, int n) {
  if (keep.empty())
    throw std::invalid_argument("subsystem subset must be nonempty");
  if (static_cast<int>(keep.size()) >= n)
    throw std::invalid_argument("subsystem subset must be proper");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= n)
      throw std::invalid_argument("subsystem index " +
                                  std::to_string(keep[i]) + " out of range");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw std::invalid_argument(
          "subsystem subset must be strictly increasing");
  }
}

void check_cut(const Cut& cut, int n) {
  if (cut.n != n)
    throw std::invalid_argument("cut is for " + std::to_string(cut.n) +
                                " subsystems, state has " + std::to_string(n));
  if (cut.side_a.size() + cut.side_b.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("cut sides do not cover all subsystems");
  std::vector<char> seen(n, 0);
  for (int i : cut.side_a) {
    if (i < 0 || i >= n || seen[i]) throw std::invalid_argument("bad cut side A");
    seen[i] = 1;
  }
  for (int i : cut.side_b) {
    if (i < 0 || i >= n || seen[i]) throw std::invalid_argument("bad cut side B");
    seen[i] = 1;
  }
  if (cut.side_a.empty() || cut.side_b.empty())
    throw std::invalid_argument("cut sides must be nonempty");
}

}  // namespace

long MultipartiteState::total_dim() const { return dims_product(dims); }

MultipartiteState PureState::density() const {
  const std::size_t d = amplitudes.size();
  ComplexMatrix rho(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      rho(i, j) = amplitudes[i] * std::conj(amplitudes[j]);
  return MultipartiteState{dims, std::move(rho)};
}

MultipartiteState validate(std::vector<int> dims, ComplexMatrix rho,
                           const Tolerances& tol) {
  check_dims(dims);
  const long d = dims_product(dims);
  if (!rho.is_square() || static_cast<long>(rho.rows()) != d)
    throw StateError(StateDefect::DimensionMismatch,
                     "matrix is " + std::to_string(rho.rows()) + "x" +
                         std::to_string(rho.cols()) + " but dims require " +
                         std::to_string(d) + "x" + std::to_string(d));
  if (!rho.all_finite())
    throw StateError(StateDefect::DimensionMismatch,
                     "matrix contains non-finite entries");

  const double norm = frobenius_norm(rho);
  const double defect = hermiticity_defect(rho);
  if (defect > tol.hermiticity * std::max(1.0, norm))
    throw StateError(StateDefect::NotHermitian,
                     "Hermiticity defect " + std::to_string(defect) +
                         " exceeds tolerance");

  const cplx tr = trace(rho);
  if (std::abs(tr - cplx(1.0, 0.0)) > tol.trace_one)
    throw StateError(StateDefect::TraceNotOne,
                     "trace is " + std::to_string(tr.real()) +
                         (tr.imag() >= 0 ? "+" : "") +
                         std::to_string(tr.imag()) + "i, expected 1");

  const EigResult eig = hermitian_eig(rho, tol);
  const double min_eig = eig.eigenvalues.back();
  if (min_eig < -tol.positivity)
    throw StateError(StateDefect::NotPositive,
                     "minimum eigenvalue " + std::to_string(min_eig) +
                         " is below -" + std::to_string(tol.positivity));

  return MultipartiteState{std::move(dims), std::move(rho)};
}

PureState make_pure_state(std::vector<int> dims, std::vector<cplx> amplitudes,
                          const Tolerances& tol) {
  check_dims(dims);
  const long d = dims_product(dims);
  if (static_cast<long>(amplitudes.size()) != d)
    throw StateError(StateDefect::DimensionMismatch,
                     "amplitude count " + std::to_string(amplitudes.size()) +
                         " does not match dimension " + std::to_string(d));
  const double norm = std::sqrt(
      kernels::active().sumsq(amplitudes.size(), amplitudes.data()));
  if (std::abs(norm - 1.0) > tol.unit_norm)
    throw StateError(StateDefect::NotNormalized,
                     "amplitude norm " + std::to_string(norm) + " is not 1");
  return PureState{std::move(dims), std::move(amplitudes)};
}

PureState ghz(int n) {
  if (n < 2) throw std::invalid_argument("ghz requires at least 2 qubits");
  if (n > 20) throw std::invalid_argument("ghz: qubit count too large");
  const std::size_t d = std::size_t{1} << n;
  std::vector<cplx> amp(d, cplx(0.0, 0.0));
  const double r = 1.0 / std::sqrt(2.0);
  amp.front() = cplx(r, 0.0);
  amp.back() = cplx(r, 0.0);
  return PureState{std::vector<int>(n, 2), std::move(amp)};
}

MultipartiteState dct_state(double lam0p, double lam0m,
                            const std::array<double, 3>& lam,
                            const Tolerances& tol) {
  const std::array<double, 5> weights{lam0p, lam0m, lam[0], lam[1], lam[2]};
  for (double w : weights)
    if (w < 0.0)
      throw StateError(StateDefect::NegativeWeight,
                       "weight " + std::to_string(w) + " is negative");
  const double sum = lam0p + lam0m + 2.0 * (lam[0] + lam[1] + lam[2]);
  if (std::abs(sum - 1.0) > tol.weight_norm)
    throw StateError(StateDefect::NotNormalized,
                     "weights sum to " + std::to_string(sum) +
                         " (lam0p + lam0m + 2(lam1+lam2+lam3) must be 1)");

  // basis vectors (|j>|0> +/- |flip(j)>|1>)/sqrt(2): amplitude at 2j and
  // at 2(3-j)+1, with j = 0..3 over the first two qubits
  ComplexMatrix rho(8, 8);
  const double r = 1.0 / std::sqrt(2.0);
  auto add_projector = [&rho, r](int j, double sign, double weight) {
    if (weight == 0.0) return;
    const int i0 = 2 * j;
    const int i1 = 2 * (3 - j) + 1;
    const double h = weight * r * r;
    rho(i0, i0) += h;
    rho(i1, i1) += h;
    rho(i0, i1) += sign * h;
    rho(i1, i0) += sign * h;
  };
  add_projector(0, +1.0, lam0p);
  add_projector(0, -1.0, lam0m);
  for (int j = 1; j <= 3; ++j) {
    add_projector(j, +1.0, lam[j - 1]);
    add_projector(j, -1.0, lam[j - 1]);
  }
  return MultipartiteState{{2, 2, 2}, std::move(rho)};
}

MultipartiteState white_noise_mix(const MultipartiteState& s, double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::invalid_argument("noise parameter x = " + std::to_string(x) +
                                " must lie in [0, 1]");
  const long d = s.total_dim();
  ComplexMatrix mixed = ComplexMatrix::identity(d);
  kernels::active().axpby(mixed.size(), cplx(x, 0.0), s.rho.data(),
                          cplx((1.0 - x) / static_cast<double>(d), 0.0),
                          mixed.data());
  return MultipartiteState{s.dims, std::move(mixed)};
}

ComplexMatrix partial_trace(const MultipartiteState& s,
                            const std::vector<int>& keep) {
  check_subset(keep, s.parties());
  const SplitIndexer ix(s.dims, keep);
  const long dk = ix.dim_sel();
  const long dt = ix.dim_rest();
  ComplexMatrix out(dk, dk);
  for (long a = 0; a < dk; ++a)
    for (long b = 0; b < dk; ++b) {
      cplx acc(0.0, 0.0);
      for (long t = 0; t < dt; ++t) acc += s.rho(ix.fuse(a, t), ix.fuse(b, t));
      out(a, b) = acc;
    }
  return out;
}

ComplexMatrix partial_trace(const PureState& psi, const std::vector<int>& keep) {
  check_subset(keep, psi.parties());
  const SplitIndexer ix(psi.dims, keep);
  const long dk = ix.dim_sel();
  const long dt = ix.dim_rest();
  ComplexMatrix out(dk, dk);
  for (long a = 0; a < dk; ++a)
    for (long b = 0; b < dk; ++b) {
      cplx acc(0.0, 0.0);
      for (long t = 0; t < dt; ++t)
        acc += psi.amplitudes[ix.fuse(a, t)] *
               std::conj(psi.amplitudes[ix.fuse(b, t)]);
      out(a, b) = acc;
    }
  return out;
}

BipartiteView bipartite_view(const MultipartiteState& s, const Cut& cut) {
  check_cut(cut, s.parties());
  const SplitIndexer ix(s.dims, cut.side_a);
  const long da = ix.dim_sel();
  const long db = ix.dim_rest();
  ComplexMatrix out(da * db, da * db);
  for (long a = 0; a < da; ++a)
    for (long b = 0; b < db; ++b) {
      const long row = a * db + b;
      const long src_row = ix.fuse(a, b);
      for (long a2 = 0; a2 < da; ++a2)
        for (long b2 = 0; b2 < db; ++b2)
          out(row, a2 * db + b2) = s.rho(src_row, ix.fuse(a2, b2));
    }
  return BipartiteView{std::move(out), static_cast<int>(da),
                       static_cast<int>(db)};
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, int dim_a, int dim_b) {
  const long d = static_cast<long>(dim_a) * dim_b;
  if (!m.is_square() || static_cast<long>(m.rows()) != d)
    throw std::invalid_argument("partial_transpose: matrix is not " +
                                std::to_string(d) + "x" + std::to_string(d));
  ComplexMatrix out(d, d);
  for (int i = 0; i < dim_a; ++i)
    for (int j = 0; j < dim_a; ++j)
      for (int k = 0; k < dim_b; ++k)
        for (int l = 0; l < dim_b; ++l)
          out(i * dim_b + k, j * dim_b + l) = m(j * dim_b + k, i * dim_b + l);
  return out;
}

ComplexMatrix realign(const ComplexMatrix& m, int dim_a, int dim_b) {
  const long d = static_cast<long>(dim_a) * dim_b;
  if (!m.is_square() || static_cast<long>(m.rows()) != d)
    throw std::invalid_argument("realign: matrix is not " + std::to_string(d) +
                                "x" + std::to_string(d));
  ComplexMatrix out(static_cast<long>(dim_a) * dim_a,
                    static_cast<long>(dim_b) * dim_b);
  for (int i = 0; i < dim_a; ++i)
    for (int j = 0; j < dim_a; ++j)
      for (int k = 0; k < dim_b; ++k)
        for (int l = 0; l < dim_b; ++l)
          out(i * dim_a + j, k * dim_b + l) = m(i * dim_b + k, j * dim_b + l);
  return out;
}

}  // namespace qconc
