#pragma once

#include <map>

#include "zernike/aggregate.hpp"

namespace zernike {

/// Folds measured gradient coefficients into the right-hand-side aggregate
/// of the least-squares normal equations:
///   phi_n^m = (plus_{n-1}^{m+1} + minus_{n-1}^{m-1}) / 2,
/// with degrees up to pair.max_degree() + 1.
CoefficientAggregate phi_from_gradients(const GradientCoefficientPair& pair);

struct ReconstructionReport {
  CoefficientAggregate alpha_hat;  // no (0, 0) entry: piston is unobservable
  bool piston_undetermined;        // always true
  double residual_norm_sq;         // ||A alpha_hat - data||^2 over both signs
  std::map<int, int> per_m_orders; // m -> I_m, the finitization order used
};

/// Analytic least-squares wavefront estimate from gradient data, truncated
/// at degree N (N >= 1).  Each azimuthal order m decouples; with
/// C_{|m|}^m = 1/|m| and C_n^m = 1/(2n) for n > |m|, the estimate is
///   alpha_n^m = C_n^m phi_n^m - C_{n+2}^m phi_{n+2}^m
/// for interior degrees and the one-term form C_n^m phi_n^m at the top
/// degree |m| + 2 I_m (the only rows touched by truncation).  For m = 0 the
/// first row and column are deleted and the piston is reported as
/// undetermined rather than estimated.
ReconstructionReport reconstruct(const GradientCoefficientPair& pair, int N);

/// ||A_plus alpha - pair.plus||^2 + ||A_minus alpha - pair.minus||^2 in the
/// aggregate norm.
double residual_norm_sq(const CoefficientAggregate& alpha,
                        const GradientCoefficientPair& pair);

}  // namespace zernike
