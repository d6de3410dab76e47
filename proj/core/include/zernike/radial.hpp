#pragma once

#include <utility>
#include <vector>

#include "zernike/indexing.hpp"

namespace zernike {

/// Evaluation route for the radial polynomials R_n^{|m|}.
enum class RadialMethod {
  Monomial,      // signed binomial sum in powers of rho; capped at n <= 20
  Recurrence,    // four-term recursion over the (degree, order) triangle
  ChebyshevDCT,  // equidistant cosine sampling, exact for the sample counts used
};

/// R_n^{|m|}(rho).  Returns 0 for n - m_abs odd or negative (the convention
/// for invalid indices).  Throws std::invalid_argument for negative n or
/// m_abs, and for Monomial with n > 20; std::domain_error for rho outside
/// [0, 1].
double radial_eval(int n, int m_abs, double rho, RadialMethod method);

/// All same-degree radial values [R_n^n, R_n^{n-2}, ..., R_n^{1 or 0}](rho)
/// from one batch of cosine samples of the degree-n Chebyshev polynomial.
std::vector<double> radial_eval_all_m(int n, double rho);

/// Z_n^m at a disk point: R_n^{|m|}(rho) * exp(i m theta).
/// Invalid indices evaluate to 0.
Complex circle_eval(const ZernikeIndex& index, const EvalPoint& point,
                    RadialMethod method = RadialMethod::Recurrence);

/// Triangle of radial values R_d^k(rho) for every degree d <= n_max, filled
/// in one pass of the four-term recursion.  at() returns 0 for invalid
/// (d, k) pairs.
class RadialTable {
 public:
  RadialTable(int n_max, double rho);
  double at(int d, int k_abs) const noexcept;
  int n_max() const noexcept { return n_max_; }

 private:
  int n_max_;
  std::vector<double> v_;
};

/// Two-term representation of the Lukosz polynomial
/// L_n^m = R_{n_pos}^m - R_{n_neg}^m with n_pos = n and n_neg = n - 2.
struct LukoszCoeffs {
  int m;
  int n_pos;
  int n_neg;
};

/// Requires m >= 0, n - m even, n >= m + 2.
LukoszCoeffs lukosz_coeffs(int n, int m);
double lukosz_eval(int n, int m, double rho,
                   RadialMethod method = RadialMethod::Recurrence);

/// Pupil-scaling coefficients c_n with
///   R_{n'}^m(eps * rho) = sum_n c_n R_n^m(rho),  n = m, m+2, ..., n',
/// returned as (n, c_n) pairs ascending in n.  Requires 0 < eps <= 1.
std::vector<std::pair<int, double>> scale_expansion(int n_prime, int m,
                                                    double epsilon);

}  // namespace zernike
