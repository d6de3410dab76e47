#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>

namespace zernike {

using Complex = std::complex<double>;

/// Index (n, m) of a circle polynomial Z_n^m: radial degree n, signed
/// azimuthal order m.  Indices with n - |m| odd or negative are
/// representable but flagged invalid; the attached polynomial is
/// identically zero by convention.
struct ZernikeIndex {
  int n = 0;
  int m = 0;

  bool valid() const noexcept {
    const int d = n - std::abs(m);
    return d >= 0 && d % 2 == 0;
  }

  friend bool operator==(const ZernikeIndex&, const ZernikeIndex&) = default;
};

/// Strict weak order by (m, then n); matches the on-disk coefficient layout.
struct MNOrder {
  bool operator()(const ZernikeIndex& a, const ZernikeIndex& b) const noexcept {
    if (a.m != b.m) return a.m < b.m;
    return a.n < b.n;
  }
};

/// Point on the closed unit disk, kept in both Cartesian and polar form.
/// Construction outside the disk (beyond a small rounding slack) throws
/// std::domain_error.
class EvalPoint {
 public:
  EvalPoint(double nu, double mu);
  static EvalPoint polar(double rho, double theta);

  double nu() const noexcept { return nu_; }
  double mu() const noexcept { return mu_; }
  double rho() const noexcept { return rho_; }
  double theta() const noexcept { return theta_; }

 private:
  EvalPoint() = default;
  double nu_ = 0.0, mu_ = 0.0, rho_ = 0.0, theta_ = 0.0;
};

}  // namespace zernike
