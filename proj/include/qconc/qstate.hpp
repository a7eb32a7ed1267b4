#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "qconc/matrix.hpp"
#include "qconc/partition.hpp"
#include "qconc/tolerances.hpp"

namespace qconc {

enum class StateDefect {
  DimensionMismatch,
  NotHermitian,
  TraceNotOne,
  NotPositive,
  NegativeWeight,
  NotNormalized,
};

class StateError : public std::runtime_error {
 public:
  StateError(StateDefect defect, const std::string& msg)
      : std::runtime_error(msg), defect_(defect) {}
  StateDefect defect() const { return defect_; }

 private:
  StateDefect defect_;
};

/// A density matrix together with its tensor-factor dimensions. Index
/// convention: basis index i decomposes mixed-radix over dims with the
/// first subsystem most significant, matching the Kronecker product order.
struct MultipartiteState {
  std::vector<int> dims;
  ComplexMatrix rho;

  int parties() const { return static_cast<int>(dims.size()); }
  long total_dim() const;
};

/// Amplitude vector of a pure state, unit norm.
struct PureState {
  std::vector<int> dims;
  std::vector<cplx> amplitudes;

  int parties() const { return static_cast<int>(dims.size()); }
  MultipartiteState density() const;
};

/// Checks every state invariant (dimension consistency, Hermiticity, unit
/// trace, positivity) and returns the state. Each failure throws a
/// StateError with its own defect code. Entries are never clamped.
MultipartiteState validate(std::vector<int> dims, ComplexMatrix rho,
                           const Tolerances& tol = {});

/// Validates the amplitude norm and returns the pure state.
PureState make_pure_state(std::vector<int> dims, std::vector<cplx> amplitudes,
                          const Tolerances& tol = {});

/// n-qubit state (|0...0> + |1...1>)/sqrt(2).
PureState ghz(int n);

/// Three-qubit mixture diagonal in the GHZ-type basis
/// (|j>|0> +/- |flip(j)>|1>)/sqrt(2), j over the two-qubit basis states.
/// Weights must be non-negative with lam0p + lam0m + 2(lam1+lam2+lam3) = 1.
MultipartiteState dct_state(double lam0p, double lam0m,
                            const std::array<double, 3>& lam,
                            const Tolerances& tol = {});

/// (1-x)/D * I + x * rho for x in [0, 1].
MultipartiteState white_noise_mix(const MultipartiteState& s, double x);

/// Reduced density matrix on the subsystems in keep (strictly increasing,
/// nonempty, proper).
ComplexMatrix partial_trace(const MultipartiteState& s,
                            const std::vector<int>& keep);
ComplexMatrix partial_trace(const PureState& psi, const std::vector<int>& keep);

/// The state re-indexed as a bipartite operator for one cut: row index is
/// a*dim_b + b with a mixed-radix over the side-A factors and b over side B.
/// A permutation similarity, so the spectrum is unchanged.
struct BipartiteView {
  ComplexMatrix matrix;
  int dim_a = 0;
  int dim_b = 0;
};

BipartiteView bipartite_view(const MultipartiteState& s, const Cut& cut);

/// Transpose of the A-side indices only: out(i,k; j,l) = m(j,k; i,l).
ComplexMatrix partial_transpose(const ComplexMatrix& m, int dim_a, int dim_b);

/// The dim_a^2 x dim_b^2 reshuffle with out(i*dim_a + j, k*dim_b + l)
/// = m(i,k; j,l). Its trace norm exceeding 1 witnesses entanglement.
ComplexMatrix realign(const ComplexMatrix& m, int dim_a, int dim_b);

}  // namespace qconc
