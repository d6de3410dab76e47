#include "zernike/radial.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zernike {

namespace {

constexpr int kMonomialDegreeCap = 20;

void check_radial_args(int n, int m_abs, double rho) {
  if (n < 0 || m_abs < 0) {
    throw std::invalid_argument("radial_eval: negative degree or order");
  }
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw std::domain_error("radial_eval: rho outside [0, 1]");
  }
}

// Binomial sum in powers of rho^2, accumulated in extended precision so the
// alternating-sign cancellation stays well under the cross-method tolerances.
double radial_monomial(int n, int m_abs, double rho) {
  if (n > kMonomialDegreeCap) {
    throw std::invalid_argument(
        "radial_eval: Monomial method is capped at n <= 20; use Recurrence or "
        "ChebyshevDCT");
  }
  const int k = (n - m_abs) / 2;
  // factor[s] = (-1)^s (n-s)! / (s! ((n+m)/2 - s)! ((n-m)/2 - s)!)
  //           = (-1)^s C(n-s, k) C(k, s),  all integers.
  long double coeff[kMonomialDegreeCap / 2 + 1];
  for (int s = 0; s <= k; ++s) {
    long double c = 1.0L;
    for (int i = 1; i <= k; ++i) c = c * (n - s - i + 1) / i;  // C(n-s, k)
    for (int i = 1; i <= s; ++i) c = c * (k - i + 1) / i;      // C(k, s)
    coeff[s] = (s % 2 == 0) ? c : -c;
  }
  const long double u = static_cast<long double>(rho) * rho;
  long double acc = 0.0L;  // Horner in u: coeff[0] u^k + ... + coeff[k]
  for (int s = 0; s <= k; ++s) acc = acc * u + coeff[s];
  for (int i = 0; i < m_abs; ++i) acc *= rho;
  return static_cast<double>(acc);
}

// Full triangle fill; returns the flat storage used by RadialTable too.
// Row d starts at d(d+1)/2 and holds slots for k = 0..d (only slots with
// k = d mod 2 are meaningful).
std::vector<double> fill_triangle(int n_max, double rho) {
  std::vector<double> v(std::size_t(n_max + 1) * (n_max + 2) / 2, 0.0);
  auto slot = [&](int d, int k) -> double& {
    return v[std::size_t(d) * (d + 1) / 2 + k];
  };
  auto get = [&](int d, int k) -> double {
    if (k > d || (d - k) % 2 != 0) return 0.0;
    return slot(d, k);
  };
  slot(0, 0) = 1.0;
  for (int d = 1; d <= n_max; ++d) {
    for (int k = d % 2; k <= d; k += 2) {
      slot(d, k) =
          rho * (get(d - 1, std::abs(k - 1)) + get(d - 1, k + 1)) -
          get(d - 2, k);
    }
  }
  return v;
}

double chebyshev_u(int n, double x) {
  if (n == 0) return 1.0;
  double prev = 1.0, cur = 2.0 * x;
  for (int i = 2; i <= n; ++i) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

struct KahanSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    const double y = x - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

// Equidistant cosine rule for (1/2pi) Int_0^2pi U_n(rho cos t) cos(m t) dt.
// The integrand is a trigonometric polynomial of degree n + m, so any even
// sample count above that reproduces the integral without discretization
// error; the smallest such count, n + m + 2 rounded up to even, is used.
double radial_dct(int n, int m_abs, double rho) {
  int samples = n + m_abs + 2;
  if (samples % 2 != 0) ++samples;
  const double step = 2.0 * std::numbers::pi / samples;
  KahanSum acc;
  for (int k = 0; k < samples; ++k) {
    const double t = step * k;
    acc.add(chebyshev_u(n, rho * std::cos(t)) * std::cos(m_abs * t));
  }
  return acc.s / samples;
}

}  // namespace

double radial_eval(int n, int m_abs, double rho, RadialMethod method) {
  check_radial_args(n, m_abs, rho);
  if (m_abs > n || (n - m_abs) % 2 != 0) return 0.0;
  switch (method) {
    case RadialMethod::Monomial:
      return radial_monomial(n, m_abs, rho);
    case RadialMethod::Recurrence: {
      const std::vector<double> v = fill_triangle(n, rho);
      return v[std::size_t(n) * (n + 1) / 2 + m_abs];
    }
    case RadialMethod::ChebyshevDCT:
      return radial_dct(n, m_abs, rho);
  }
  throw std::invalid_argument("radial_eval: unknown method");
}

std::vector<double> radial_eval_all_m(int n, double rho) {
  check_radial_args(n, 0, rho);
  // One batch of U_n samples serves every order of degree n.  The worst
  // integrand degree is 2n (m = n), so 2n + 2 equidistant points keep the
  // rule exact across the batch.
  const int samples = 2 * n + 2;
  const double step = 2.0 * std::numbers::pi / samples;
  std::vector<double> u(samples);
  for (int k = 0; k < samples; ++k) {
    u[k] = chebyshev_u(n, rho * std::cos(step * k));
  }
  std::vector<double> out;
  out.reserve(n / 2 + 1);
  for (int m = n; m >= 0; m -= 2) {
    KahanSum acc;
    for (int k = 0; k < samples; ++k) acc.add(u[k] * std::cos(m * step * k));
    out.push_back(acc.s / samples);
  }
  return out;
}

Complex circle_eval(const ZernikeIndex& index, const EvalPoint& point,
                    RadialMethod method) {
  if (!index.valid()) return {0.0, 0.0};
  const double r = radial_eval(index.n, std::abs(index.m), point.rho(), method);
  return std::polar(r, index.m * point.theta());
}

RadialTable::RadialTable(int n_max, double rho) : n_max_(n_max) {
  if (n_max < 0) throw std::invalid_argument("RadialTable: negative degree");
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw std::domain_error("RadialTable: rho outside [0, 1]");
  }
  v_ = fill_triangle(n_max, rho);
}

double RadialTable::at(int d, int k_abs) const noexcept {
  if (d < 0 || d > n_max_ || k_abs < 0 || k_abs > d || (d - k_abs) % 2 != 0) {
    return 0.0;
  }
  return v_[std::size_t(d) * (d + 1) / 2 + k_abs];
}

LukoszCoeffs lukosz_coeffs(int n, int m) {
  if (m < 0 || n < m + 2 || (n - m) % 2 != 0) {
    throw std::invalid_argument("lukosz_coeffs: need m >= 0, n >= m + 2, n - m even");
  }
  return {m, n, n - 2};
}

double lukosz_eval(int n, int m, double rho, RadialMethod method) {
  const LukoszCoeffs lc = lukosz_coeffs(n, m);
  return radial_eval(lc.n_pos, lc.m, rho, method) -
         radial_eval(lc.n_neg, lc.m, rho, method);
}

std::vector<std::pair<int, double>> scale_expansion(int n_prime, int m,
                                                    double epsilon) {
  if (m < 0 || n_prime < m || (n_prime - m) % 2 != 0) {
    throw std::invalid_argument("scale_expansion: invalid (n', m)");
  }
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw std::domain_error("scale_expansion: epsilon outside (0, 1]");
  }
  // c_n = R_{n'}^n(eps) - R_{n'}^{n+2}(eps); the second term drops out at
  // n = n' where the index is invalid.
  const RadialTable table(n_prime, epsilon);
  std::vector<std::pair<int, double>> out;
  out.reserve((n_prime - m) / 2 + 1);
  for (int n = m; n <= n_prime; n += 2) {
    out.emplace_back(n, table.at(n_prime, n) - table.at(n_prime, n + 2));
  }
  return out;
}

}  // namespace zernike
