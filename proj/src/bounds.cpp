#include "qconc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qconc/eig.hpp"
#include "qconc/generators.hpp"

namespace qconc {
namespace {

double subset_purity_sum(const MultipartiteState& s) {
  double sum = 0.0;
  for (const auto& subset : enumerate_subsets(s.parties()))
    sum += purity(partial_trace(s, subset));
  return sum;
}

double subset_purity_sum(const PureState& psi) {
  double sum = 0.0;
  for (const auto& subset : enumerate_subsets(psi.parties()))
    sum += purity(partial_trace(psi, subset));
  return sum;
}

// Generator expectation table E(i, j) = tr{rho (gA_i x gB_j)} for all pairs,
// contracted through the realigned matrix instead of explicit Kronecker
// products: tr{rho (A x B)} = sum_{a,a',b,b'} R(a,a'; b,b') A(a',a) B(b',b).
ComplexMatrix pair_expectations(const ComplexMatrix& realigned,
                                const GeneratorBasis& gen_a,
                                const GeneratorBasis& gen_b) {
  const std::size_t da = gen_a.d, db = gen_b.d;
  ComplexMatrix ua(gen_a.mats.size(), da * da);
  for (std::size_t i = 0; i < gen_a.mats.size(); ++i)
    for (std::size_t a = 0; a < da; ++a)
      for (std::size_t a2 = 0; a2 < da; ++a2)
        ua(i, a * da + a2) = gen_a.mats[i](a2, a);
  ComplexMatrix vb(db * db, gen_b.mats.size());
  for (std::size_t j = 0; j < gen_b.mats.size(); ++j)
    for (std::size_t b = 0; b < db; ++b)
      for (std::size_t b2 = 0; b2 < db; ++b2)
        vb(b * db + b2, j) = gen_b.mats[j](b2, b);
  return matmul(matmul(ua, realigned), vb);
}

// tr(rho * g) for a Hermitian observable, real up to rounding
double expectation(const ComplexMatrix& rho, const ComplexMatrix& g) {
  cplx acc(0.0, 0.0);
  for (std::size_t a = 0; a < rho.rows(); ++a)
    for (std::size_t b = 0; b < rho.cols(); ++b) acc += rho(a, b) * g(b, a);
  return acc.real();
}

}  // namespace

double pure_c2(const PureState& psi, const Cut& cut) {
  const ComplexMatrix reduced = partial_trace(psi, cut.side_a);
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity(reduced))));
}

double pure_cn(const PureState& psi) {
  const int n = psi.parties();
  if (n < 2) throw std::invalid_argument("pure_cn requires at least 2 parties");
  const double radicand = (std::exp2(n) - 2.0) - subset_purity_sum(psi);
  return std::exp2(1.0 - 0.5 * n) * std::sqrt(std::max(0.0, radicand));
}

CutBounds cut_bounds(const MultipartiteState& s, const Cut& cut,
                     const Tolerances& tol) {
  BipartiteView view = bipartite_view(s, cut);
  const int da = view.dim_a, db = view.dim_b;
  const double m = std::min(da, db);
  const double nb = std::max(da, db);

  const double ppt = trace_norm(partial_transpose(view.matrix, da, db), tol);
  const ComplexMatrix realigned = realign(view.matrix, da, db);
  const double rn = trace_norm(realigned, tol);

  const double b1v =
      std::sqrt(2.0 / (m * (m - 1.0))) * (std::max(ppt, rn) - 1.0);

  // covariance and correlation tables over the SU(da) x SU(db) generators
  const GeneratorBasis gen_a = su_generators(da);
  const GeneratorBasis gen_b = su_generators(db);
  const ComplexMatrix pair = pair_expectations(realigned, gen_a, gen_b);

  const MultipartiteState as_bipartite{{da, db}, view.matrix};
  const ComplexMatrix rho_a = partial_trace(as_bipartite, {0});
  const ComplexMatrix rho_b = partial_trace(as_bipartite, {1});
  std::vector<double> ta(gen_a.mats.size()), tb(gen_b.mats.size());
  for (std::size_t i = 0; i < ta.size(); ++i)
    ta[i] = expectation(rho_a, gen_a.mats[i]);
  for (std::size_t j = 0; j < tb.size(); ++j)
    tb[j] = expectation(rho_b, gen_b.mats[j]);

  ComplexMatrix cov(ta.size(), tb.size());
  ComplexMatrix corr(ta.size(), tb.size());
  const double corr_scale = 0.5 * da * db;
  for (std::size_t i = 0; i < ta.size(); ++i)
    for (std::size_t j = 0; j < tb.size(); ++j) {
      const double e = pair(i, j).real();
      cov(i, j) = cplx(e - ta[i] * tb[j], 0.0);
      corr(i, j) = cplx(corr_scale * e, 0.0);
    }

  const double lin_ent_a = 1.0 - purity(rho_a);
  const double lin_ent_b = 1.0 - purity(rho_b);
  const double b2v = (2.0 * trace_norm(cov, tol) - lin_ent_a - lin_ent_b) /
                     std::sqrt(2.0 * m * (m - 1.0));

  const double b3v = std::sqrt(8.0 / (m * m * m * nb * nb * (m - 1.0))) *
                     (trace_norm(corr, tol) -
                      0.5 * std::sqrt(m * nb * (m - 1.0) * (nb - 1.0)));

  return CutBounds{cut,          static_cast<int>(m), static_cast<int>(nb),
                   ppt,          rn,
                   b1v,          b2v,                 b3v};
}

double b1(const MultipartiteState& s, const Cut& cut, const Tolerances& tol) {
  return cut_bounds(s, cut, tol).b1;
}

double b2(const MultipartiteState& s, const Cut& cut, const Tolerances& tol) {
  return cut_bounds(s, cut, tol).b2;
}

double b3(const MultipartiteState& s, const Cut& cut, const Tolerances& tol) {
  return cut_bounds(s, cut, tol).b3;
}

LowerBoundDetail lower_eq12(const MultipartiteState& s, const Tolerances& tol) {
  const int n = s.parties();
  if (n < 2)
    throw std::invalid_argument("lower_eq12 requires at least 2 parties");
  LowerBoundDetail detail;
  double best = -std::numeric_limits<double>::infinity();
  for (const Cut& cut : enumerate_cuts(n)) {
    detail.per_cut.push_back(cut_bounds(s, cut, tol));
    const CutBounds& cb = detail.per_cut.back();
    best = std::max({best, cb.b1, cb.b2, cb.b3});
  }
  // for a bipartite input the cut bound is already the target quantity
  const double prefactor = n >= 3 ? std::exp2(0.5 * (3.0 - n)) : 1.0;
  detail.value = std::max(0.0, prefactor * best);
  return detail;
}

Eq13Bounds bounds_eq13(const MultipartiteState& s) {
  const int n = s.parties();
  if (n < 2)
    throw std::invalid_argument("bounds_eq13 requires at least 2 parties");
  const double sum = subset_purity_sum(s);
  const double pur = purity(s.rho);
  const double lower_rad = (4.0 - std::exp2(3.0 - n)) * pur -
                           std::exp2(2.0 - n) * sum;
  const double upper_rad = std::exp2(2.0 - n) * ((std::exp2(n) - 2.0) - sum);
  return Eq13Bounds{std::sqrt(std::max(0.0, lower_rad)),
                    std::sqrt(std::max(0.0, upper_rad))};
}

double upper_eq14(const MultipartiteState& s, const Tolerances& tol) {
  const EigResult eig = hermitian_eig(s.rho, tol);
  const long d = s.total_dim();
  double total = 0.0;
  for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
    const double weight = eig.eigenvalues[k];
    if (weight <= tol.spectral_cutoff) continue;
    std::vector<cplx> amp(d);
    for (long i = 0; i < d; ++i) amp[i] = eig.eigenvectors(i, k);
    const PureState psi{s.dims, std::move(amp)};
    total += weight * pure_cn(psi);
  }
  return total;
}

BoundReport report(const MultipartiteState& s, const Tolerances& tol) {
  LowerBoundDetail cuts = lower_eq12(s, tol);
  const Eq13Bounds eq13 = bounds_eq13(s);
  const double eq14 = upper_eq14(s, tol);

  BoundReport rep;
  rep.per_cut = std::move(cuts.per_cut);
  rep.lower_eq12 = cuts.value;
  rep.lower_eq13 = eq13.lower;
  rep.upper_eq13 = eq13.upper;
  rep.upper_eq14 = eq14;
  rep.best_lower = std::max(rep.lower_eq12, rep.lower_eq13);
  rep.best_upper = std::min(rep.upper_eq13, rep.upper_eq14);
  rep.entangled = rep.best_lower > tol.verdict;
  return rep;
}

}  // namespace qconc
