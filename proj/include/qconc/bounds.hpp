#pragma once

#include <vector>

#include "qconc/partition.hpp"
#include "qconc/qstate.hpp"
#include "qconc/tolerances.hpp"

namespace qconc {

/// Everything one bipartite cut contributes to the lower bound: the two
/// reshuffle trace norms and the three per-cut bound values b1, b2, b3.
/// m and n_big are the smaller/larger side dimensions; formulas stated for
/// ordered side dimensions are evaluated with that relabeling, which leaves
/// every trace norm involved unchanged. b values are reported unclamped so
/// negative (vacuous) cuts stay visible; clamping happens in lower_eq12.
struct CutBounds {
  Cut cut;
  int m = 0;
  int n_big = 0;
  double ppt_norm = 0.0;
  double realign_norm = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
  double b3 = 0.0;
};

struct LowerBoundDetail {
  double value = 0.0;
  std::vector<CutBounds> per_cut;
};

struct Eq13Bounds {
  double lower = 0.0;
  double upper = 0.0;
};

struct BoundReport {
  std::vector<CutBounds> per_cut;
  double lower_eq12 = 0.0;
  double lower_eq13 = 0.0;
  double upper_eq13 = 0.0;
  double upper_eq14 = 0.0;
  double best_lower = 0.0;
  double best_upper = 0.0;
  bool entangled = false;
};

/// Bipartite concurrence of a pure state across one cut:
/// sqrt(2 (1 - tr rho_A^2)) with rho_A the side-A reduction.
double pure_c2(const PureState& psi, const Cut& cut);

/// N-partite concurrence of a pure state:
/// 2^(1 - N/2) sqrt((2^N - 2) - sum over proper subsets of tr rho_alpha^2).
double pure_cn(const PureState& psi);

/// All per-cut quantities for one cut.
CutBounds cut_bounds(const MultipartiteState& s, const Cut& cut,
                     const Tolerances& tol = {});

/// Single-value forms of the three per-cut bounds.
double b1(const MultipartiteState& s, const Cut& cut, const Tolerances& tol = {});
double b2(const MultipartiteState& s, const Cut& cut, const Tolerances& tol = {});
double b3(const MultipartiteState& s, const Cut& cut, const Tolerances& tol = {});

/// Cut-based lower bound on the N-partite concurrence:
/// max(0, 2^((3-N)/2) * max over cuts of max(b1, b2, b3)). For N = 2 the
/// prefactor is dropped and the value is the bipartite bound itself.
LowerBoundDetail lower_eq12(const MultipartiteState& s,
                            const Tolerances& tol = {});

/// Purity-based sandwich bounds:
///   lower = sqrt(max(0, (4 - 2^(3-N)) tr rho^2 - 2^(2-N) S))
///   upper = sqrt(2^(2-N) ((2^N - 2) - S))
/// with S the sum of reduction purities over all proper subsets.
Eq13Bounds bounds_eq13(const MultipartiteState& s);

/// Spectral upper bound: sum of lambda_i * pure_cn(psi_i) over the
/// eigenpairs with lambda_i above tol.spectral_cutoff. Never looser than
/// the eq13 upper bound.
double upper_eq14(const MultipartiteState& s, const Tolerances& tol = {});

/// All bounds plus the verdict: entangled when the best lower bound
/// exceeds tol.verdict.
BoundReport report(const MultipartiteState& s, const Tolerances& tol = {});

}  // namespace qconc
