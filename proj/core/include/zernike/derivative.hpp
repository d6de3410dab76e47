#pragma once

#include <cstdint>
#include <vector>

#include "zernike/aggregate.hpp"
#include "zernike/indexing.hpp"

namespace zernike {

/// Sign of the combined first-derivative operator d/dnu +- i d/dmu.
enum class DerivativeSign { Plus, Minus };

/// One integer-weighted basis term of an expansion.
struct IntegerTerm {
  ZernikeIndex index;
  std::int64_t coeff;
};

/// Closed-form expansion of (d/dnu +- i d/dmu) Z_n^m:
///   sum_l 2 (n - 2l) Z_{n-1-2l}^{m +- 1},  l = 0 .. (n - |m|)/2,
/// with invalid-index and zero-weight terms dropped.  Terms come back with
/// degrees descending.  Throws std::invalid_argument for an invalid index.
std::vector<IntegerTerm> d_combined_terms(const ZernikeIndex& index,
                                          DerivativeSign sign);
CoefficientAggregate d_combined_single(const ZernikeIndex& index,
                                       DerivativeSign sign);

/// Linear extension of d_combined_single over an aggregate.  Output degree
/// cap is max(input - 1, 0).
CoefficientAggregate d_combined(DerivativeSign sign,
                                const CoefficientAggregate& alpha);

/// Coefficients of dW/dnu and dW/dmu, recovered from the two combined
/// derivative fields as (plus + minus)/2 and (plus - minus)/(2i).
CoefficientAggregate d_nu(const CoefficientAggregate& alpha);
CoefficientAggregate d_mu(const CoefficientAggregate& alpha);

/// Forward gradient-coefficient operator at the input's degree cap N:
///   (A+- alpha)_n^m = 2 (n + 1) sum_{n' = n (2) N-1} alpha_{n'+1}^{m -+ 1},
/// producing entries of degree <= N - 1.
CoefficientAggregate apply_A(DerivativeSign sign,
                             const CoefficientAggregate& alpha);

/// Adjoint of apply_A under the aggregate inner product:
///   (A+-^H gamma)_n^m = 2 (n + 1) sum_{n' = |m| (2) n} gamma_{n'-1}^{m +- 1}.
/// Maps degree <= D input to degree <= D + 1 output, mirroring the forward
/// truncation so finite-degree adjoint identities close exactly.
CoefficientAggregate apply_A_adjoint(DerivativeSign sign,
                                     const CoefficientAggregate& gamma);

/// Kernel of the normal operator: |m| + (k - |m|)(k + |m| + 2)/2.
std::int64_t normal_kernel(int m, int k);

/// (A+^H A+ + A-^H A-) gamma at the input's degree cap N:
///   4 (n + 1) sum_{n' = |m| (2) N} normal_kernel(m, min(n, n')) gamma_{n'}^m.
CoefficientAggregate apply_normal_operator(const CoefficientAggregate& gamma);

}  // namespace zernike
