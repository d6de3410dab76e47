#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "zernike/aggregate.hpp"
#include "zernike/derivative.hpp"
#include "zernike/indexing.hpp"
#include "zernike/rational.hpp"

namespace zernike {

/// Closed-form Laplacian expansion
///   Delta Z_n^m = sum_s (s + 1)(n + s + 2)(n - s) Z_s^m,
///   s = |m|, |m|+2, ..., n - 2,
/// returned with degrees ascending; empty when n <= |m|.  Throws
/// std::invalid_argument for an invalid index.
std::vector<IntegerTerm> laplacian_terms(const ZernikeIndex& index);
CoefficientAggregate laplacian_single(const ZernikeIndex& index);

/// Linear extension over an aggregate; output cap max(input - 2, 0).
CoefficientAggregate laplacian(const CoefficientAggregate& alpha);

struct RationalTerm {
  ZernikeIndex index;
  Rational coeff;
};

/// Canonical pre-image g with Delta g = Z_n^m and no Z_{|m|}^m component:
///   coefficient of Z_{n+2}:  1 / (4 (n+2)(n+1))            (always kept)
///   coefficient of Z_n:     -1 / (2 n (n+2))               (kept iff n > |m|)
///   coefficient of Z_{n-2}:  1 / (4 n (n+1))               (kept iff n-2 > |m|)
/// Terms ascend in degree.  Coefficients are exact rationals.
std::vector<RationalTerm> inverse_laplacian_terms(const ZernikeIndex& index);
CoefficientAggregate inverse_laplacian_single(const ZernikeIndex& index);

/// Linear extension of inverse_laplacian_single; output cap input + 2.
CoefficientAggregate inverse_laplacian(const CoefficientAggregate& f);

/// Fourier coefficients psi_m of a function on the disk rim; absent orders
/// read as zero.
struct FourierBoundary {
  std::map<int, Complex> coeffs;

  Complex at(int m) const noexcept {
    auto it = coeffs.find(m);
    return it == coeffs.end() ? Complex{0.0, 0.0} : it->second;
  }
};

/// Outward normal derivative of the attached wavefront on the rim:
///   psi_m = sum_n alpha_n^m (n (n + 2) - m^2) / 2.
FourierBoundary boundary_normal_derivative(const CoefficientAggregate& alpha);

struct NeumannSolution {
  CoefficientAggregate phi;     // degrees <= N + 2, piston left at zero
  double compatibility_defect;  // |m = 0 boundary mismatch|
  bool piston_free;             // always true: piston is not determined
};

class neumann_compatibility_error : public std::domain_error {
 public:
  explicit neumann_compatibility_error(double defect);
  double defect() const noexcept { return defect_; }

 private:
  double defect_;
};

/// Solves -Delta phi = f on the unit disk with Neumann data psi:
/// particular part from inverse_laplacian_terms, harmonic components
/// Z_{|m|}^m fixed by the rim derivative for m != 0, piston left at zero.
/// Requires f supported on degrees <= N and psi on orders |m| <= N + 2.
/// Throws neumann_compatibility_error when the m = 0 data mismatch
/// exceeds tol.
NeumannSolution solve_neumann(const CoefficientAggregate& f,
                              const FourierBoundary& psi, int N,
                              double tol = 1e-10);

}  // namespace zernike
