#include "zernike/estimation.hpp"

#include <cmath>
#include <stdexcept>

#include "zernike/derivative.hpp"

namespace zernike {

CoefficientAggregate phi_from_gradients(const GradientCoefficientPair& pair) {
  CoefficientAggregate out(pair.max_degree() + 1);
  for (const auto& [idx, v] : pair.plus.entries()) {
    out.add({idx.n + 1, idx.m - 1}, 0.5 * v);
  }
  for (const auto& [idx, v] : pair.minus.entries()) {
    out.add({idx.n + 1, idx.m + 1}, 0.5 * v);
  }
  return out;
}

ReconstructionReport reconstruct(const GradientCoefficientPair& pair, int N) {
  if (N < 1) throw std::invalid_argument("reconstruct: degree must be >= 1");
  const CoefficientAggregate phi = phi_from_gradients(pair);

  ReconstructionReport report{CoefficientAggregate(N), true, 0.0, {}};
  for (int m = -N; m <= N; ++m) {
    const int am = std::abs(m);
    const int order = (N - am) / 2;
    report.per_m_orders[m] = order;
    for (int j = order; j >= 0; --j) {
      const int n = am + 2 * j;
      if (n == 0) continue;  // piston stays undetermined
      const double c_n = (n == am) ? 1.0 / am : 1.0 / (2.0 * n);
      Complex v = c_n * phi.at({n, m});
      if (j < order) {
        // Interior rows see the next coefficient of the bidiagonal inverse;
        // only the top degree per order is touched by truncation.
        v -= phi.at({n + 2, m}) / (2.0 * (n + 2));
      }
      if (v != Complex{0.0, 0.0}) report.alpha_hat.set({n, m}, v);
    }
  }
  report.residual_norm_sq = residual_norm_sq(report.alpha_hat, pair);
  return report;
}

double residual_norm_sq(const CoefficientAggregate& alpha,
                        const GradientCoefficientPair& pair) {
  return norm_sq(apply_A(DerivativeSign::Plus, alpha) - pair.plus) +
         norm_sq(apply_A(DerivativeSign::Minus, alpha) - pair.minus);
}

}  // namespace zernike
