#include "zernike/indexing.hpp"

#include <stdexcept>

namespace zernike {

namespace {
// Rounding slack so rim points built from cos/sin pairs survive the check.
constexpr double kDiskSlack = 1e-12;
}  // namespace

EvalPoint::EvalPoint(double nu, double mu) {
  const double r2 = nu * nu + mu * mu;
  if (!(r2 <= 1.0 + kDiskSlack)) {
    throw std::domain_error("EvalPoint: (nu, mu) lies outside the unit disk");
  }
  nu_ = nu;
  mu_ = mu;
  rho_ = std::min(std::sqrt(r2), 1.0);
  theta_ = std::atan2(mu, nu);
}

EvalPoint EvalPoint::polar(double rho, double theta) {
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw std::domain_error("EvalPoint: rho outside [0, 1]");
  }
  EvalPoint p;
  p.nu_ = rho * std::cos(theta);
  p.mu_ = rho * std::sin(theta);
  p.rho_ = rho;
  p.theta_ = theta;
  return p;
}

}  // namespace zernike
